#include "qarena/game.hpp"

#include <cmath>

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"

namespace qarena {

void GameConfig::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must be in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0 / 3.0)) {
    throw ParameterError("delta must be in (0, 1/3]");  // the union bound needs delta <= 1/3
  }
  if (round_cap < 1) throw ParameterError("round_cap must be >= 1");
  if (!(sample_schedule_scale > 0.0)) throw ParameterError("schedule scale must be positive");
  if (!(trial_cap_factor > 0.0)) throw ParameterError("trial cap factor must be positive");
}

std::int64_t sample_schedule(int t, double eps, double delta) {
  if (t < 1) throw ParameterError("rounds are counted from 1");
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must be in (0, 1]");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must be in (0, 1)");
  const double td = static_cast<double>(t);
  return static_cast<std::int64_t>(
      std::ceil(2.0 / (eps * eps) * (std::log(2.0 * td) + td * std::log(1.0 / delta))));
}

ClaimCheck verify_claim(const std::vector<std::uint32_t>& bob_samples,
                        const std::vector<std::uint32_t>& alice_samples, const Witness& f,
                        double eps, std::int64_t scheduled) {
  if (static_cast<std::int64_t>(bob_samples.size()) != scheduled ||
      static_cast<std::int64_t>(alice_samples.size()) != scheduled) {
    throw ProtocolError("sample batch size differs from the schedule");
  }
  double alice_mean = 0.0;
  for (std::uint32_t x : alice_samples) alice_mean += f(x);
  alice_mean /= static_cast<double>(alice_samples.size());
  double bob_mean = 0.0;
  for (std::uint32_t x : bob_samples) bob_mean += f(x);
  bob_mean /= static_cast<double>(bob_samples.size());

  ClaimCheck check;
  check.empirical_gap = alice_mean - bob_mean;
  check.accepted = check.empirical_gap >= eps / 2.0;
  return check;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kBobRefutedAlice:
      return "bob-refuted-alice";
    case Verdict::kBobConceded:
      return "bob-conceded";
    case Verdict::kAliceBudgetExceeded:
      return "alice-budget-exceeded";
  }
  return "unknown";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kAliceWins:
      return "alice-wins";
    case Outcome::kBobWins:
      return "bob-wins";
    case Outcome::kRoundCapReached:
      return "round-cap-reached";
  }
  return "unknown";
}

std::uint64_t hash_samples(const std::vector<std::uint32_t>& samples) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t s : samples) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (s >> (8 * byte)) & 0xffu;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

namespace {

void record_diagnostics(RoundRecord& record, const GameConfig& config, AliceStrategy& alice,
                        const DensePmf& target, GameTranscript& transcript) {
  if (!config.exact_diagnostics) return;
  const DensePmf current = alice.disclose();
  record.exact_divergence_nats = relative_entropy(target, current);
  record.exact_tv = tv_distance(current, target);
  if (auto g = alice.guess()) {
    ProgressEntry e = check_progress(*g, target);
    if (!record.empirical_gaps.empty()) e.claimed_gap = record.empirical_gaps.front();
    transcript.ledger.entries.push_back(e);
  }
}

}  // namespace

GameTranscript run_game(const GameConfig& config, AliceStrategy& alice, BobStrategy& bob,
                        const DensePmf& target, std::uint64_t seed,
                        const std::string& target_label) {
  config.validate();

  GameTranscript transcript;
  transcript.config = config;
  transcript.width = target.width();
  transcript.seed = seed;
  transcript.target_label = target_label;
  transcript.alice_name = alice.name();
  transcript.bob_name = bob.name();

  alice.reset(target.width(), config);
  bob.reset(target.width(), config, target);

  const CdfSampler device(target);
  const SplitRng root = SplitRng(seed).derive(0x67616d65ULL);
  transcript.initial_divergence_nats = relative_entropy(target, alice.disclose());
  transcript.ledger.initial_divergence_nats = transcript.initial_divergence_nats;

  std::vector<Witness> accepted_history;
  transcript.outcome = Outcome::kRoundCapReached;

  for (int t = 1; t <= config.round_cap; ++t) {
    SplitRng round_rng = root.derive(static_cast<std::uint64_t>(t));
    RoundRecord record;
    record.t = t;
    record.alice_label = alice.name();
    record.alice_guess = alice.guess();

    const DensePmf disclosed = alice.disclose();
    SplitRng propose_rng = round_rng.derive(2);
    std::optional<Witness> witness;
    try {
      witness = bob.propose(disclosed, t, propose_rng);
    } catch (const Error&) {
      // A prover that cannot produce a witness in time has conceded.
      witness.reset();
    }
    if (!witness.has_value()) {
      record.verdict = Verdict::kBobConceded;
      record_diagnostics(record, config, alice, target, transcript);
      transcript.rounds.push_back(std::move(record));
      transcript.outcome = Outcome::kAliceWins;
      break;
    }
    if (witness->width() != target.width()) {
      throw ProtocolError("witness width differs from the game width");
    }
    record.bob_witness = witness;

    const std::int64_t scheduled = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(sample_schedule(t, config.eps, config.delta)) *
                  config.sample_schedule_scale));
    record.samples_per_side = scheduled;

    // Fresh referee batches every round; the players never see each other's
    // samples.
    SplitRng alice_rng = round_rng.derive(0);
    SplitRng bob_rng = round_rng.derive(1);
    std::vector<std::uint32_t> alice_batch;
    try {
      alice_batch = alice.draw(scheduled, alice_rng);
    } catch (const Error&) {
      // Budget exhaustion or any other failure to serve samples in time
      // costs the learner the game.
      record.verdict = Verdict::kAliceBudgetExceeded;
      record_diagnostics(record, config, alice, target, transcript);
      transcript.rounds.push_back(std::move(record));
      transcript.outcome = Outcome::kBobWins;
      break;
    }
    std::vector<std::uint32_t> bob_batch;
    bob_batch.reserve(static_cast<std::size_t>(scheduled));
    for (std::int64_t i = 0; i < scheduled; ++i) bob_batch.push_back(device(bob_rng));

    record.alice_sample_hash = hash_samples(alice_batch);
    record.bob_sample_hash = hash_samples(bob_batch);
    if (config.embed_samples) {
      record.alice_samples = alice_batch;
      record.bob_samples = bob_batch;
    }

    // Check the new witness first, then (optionally) the whole history.
    std::vector<const Witness*> checked;
    checked.push_back(&*witness);
    if (config.recheck_history) {
      for (const Witness& f : accepted_history) checked.push_back(&f);
    }
    int first_accepted = -1;
    for (std::size_t i = 0; i < checked.size(); ++i) {
      const ClaimCheck check =
          verify_claim(bob_batch, alice_batch, *checked[i], config.eps, scheduled);
      record.empirical_gaps.push_back(check.empirical_gap);
      record.accepted_flags.push_back(check.accepted);
      if (check.accepted && first_accepted < 0) first_accepted = static_cast<int>(i);
    }

    if (first_accepted < 0) {
      // The claim failed verification: the prover could not refute the
      // disclosed distribution, which ends the game in the learner's favor.
      record.claim_rejected = true;
      record.verdict = Verdict::kBobConceded;
      record_diagnostics(record, config, alice, target, transcript);
      transcript.rounds.push_back(std::move(record));
      transcript.outcome = Outcome::kAliceWins;
      break;
    }

    record.verdict = Verdict::kBobRefutedAlice;
    const Witness& refuting = *checked[static_cast<std::size_t>(first_accepted)];
    accepted_history.push_back(refuting);
    try {
      alice.observe_accepted(refuting);
    } catch (const Error&) {
      record.verdict = Verdict::kAliceBudgetExceeded;
      record_diagnostics(record, config, alice, target, transcript);
      transcript.rounds.push_back(std::move(record));
      transcript.outcome = Outcome::kBobWins;
      break;
    }
    record_diagnostics(record, config, alice, target, transcript);
    transcript.rounds.push_back(std::move(record));
  }

  transcript.final_tv = tv_distance(alice.disclose(), target);
  return transcript;
}

}  // namespace qarena
