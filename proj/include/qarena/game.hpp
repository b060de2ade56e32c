#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qarena/mirror.hpp"
#include "qarena/pmf.hpp"
#include "qarena/rng.hpp"
#include "qarena/witness.hpp"

namespace qarena {

// The verification game. Each round the learner (Alice) discloses her mock
// distribution, the prover (Bob) proposes a witness or concedes, and the
// referee draws fresh sample batches from both sides and accepts the claim
// when the empirical gap clears eps/2. Defeat rules are concrete: Bob loses
// by conceding, by a rejected claim, or at the round cap; Alice loses when
// her sampler exhausts its trial budget or her strategy throws.

struct GameConfig {
  double eps = 0.3;    // distinguishability: claims assert a true gap >= eps
  double delta = 0.05; // per-game error probability target
  int round_cap = 1000;
  double sample_schedule_scale = 1.0;  // multiplies the per-round schedule
  double trial_cap_factor = 20.0;      // learner budget: ceil(factor * e^{eps t/4}) per sample
  bool recheck_history = true;         // re-test all previously accepted witnesses
  bool exact_diagnostics = true;       // record exact divergence/TV per round
  bool embed_samples = false;          // keep raw referee samples in the transcript

  void validate() const;
};

/// Referee batch size for round t: ceil(2 eps^-2 (ln(2t) + t ln(1/delta)))
/// per side. Each of the t checked expectations then errs by more than eps/2
/// with probability at most delta^t / t, so the union over the whole game is
/// a geometric series summing to O(delta).
std::int64_t sample_schedule(int t, double eps, double delta);

struct ClaimCheck {
  double empirical_gap = 0.0;  // mean over Alice's samples minus mean over Bob's
  bool accepted = false;       // empirical_gap >= eps / 2
};

/// Both batches must have exactly the scheduled size.
ClaimCheck verify_claim(const std::vector<std::uint32_t>& bob_samples,
                        const std::vector<std::uint32_t>& alice_samples, const Witness& f,
                        double eps, std::int64_t scheduled);

enum class Verdict { kBobRefutedAlice, kBobConceded, kAliceBudgetExceeded };
enum class Outcome { kAliceWins, kBobWins, kRoundCapReached };

std::string to_string(Verdict v);
std::string to_string(Outcome o);

struct RoundRecord {
  int t = 0;
  std::string alice_label;
  std::optional<GibbsGuess> alice_guess;  // present when Alice plays a Gibbs learner
  std::optional<Witness> bob_witness;     // empty on voluntary concession
  bool claim_rejected = false;            // witness proposed but no check accepted
  std::int64_t samples_per_side = 0;
  std::vector<double> empirical_gaps;     // entry 0: new witness, then history
  std::vector<bool> accepted_flags;
  Verdict verdict = Verdict::kBobConceded;
  std::uint64_t alice_sample_hash = 0;
  std::uint64_t bob_sample_hash = 0;
  std::vector<std::uint32_t> alice_samples;  // only with embed_samples
  std::vector<std::uint32_t> bob_samples;
  // Desk-scale diagnostics, taken after Alice's update for the round.
  double exact_divergence_nats = 0.0;
  double exact_tv = 0.0;
};

struct GameTranscript {
  int version = 1;
  GameConfig config;
  int width = 0;
  std::uint64_t seed = 0;
  std::string target_label;
  std::string alice_name;
  std::string bob_name;
  std::vector<RoundRecord> rounds;
  Outcome outcome = Outcome::kRoundCapReached;
  double initial_divergence_nats = 0.0;  // D(target || Alice's opening pmf)
  double final_tv = 0.0;                 // exact TV of Alice's final pmf vs target
  ProgressLedger ledger;
};

/// Alice: discloses a distribution, serves referee sample requests and
/// updates on accepted witnesses. draw() may throw BudgetError.
class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(int width, const GameConfig& config) = 0;
  virtual DensePmf disclose() const = 0;
  virtual std::vector<std::uint32_t> draw(std::int64_t count, SplitRng& rng) = 0;
  virtual void observe_accepted(const Witness& f) = 0;
  virtual std::optional<GibbsGuess> guess() const { return std::nullopt; }
};

/// Bob: proposes the next witness against the disclosed distribution, or
/// concedes with std::nullopt.
class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(int width, const GameConfig& config, const DensePmf& target) = 0;
  virtual std::optional<Witness> propose(const DensePmf& alice_disclosed, int t, SplitRng& rng) = 0;
};

/// Plays the full game against an exactly known target distribution (the
/// referee draws Bob's batches from it directly). Deterministic in the seed;
/// rerunning with a transcript's seed reproduces it bit-identically.
GameTranscript run_game(const GameConfig& config, AliceStrategy& alice, BobStrategy& bob,
                        const DensePmf& target, std::uint64_t seed,
                        const std::string& target_label = "");

/// FNV-1a over the sample words, as logged in transcripts.
std::uint64_t hash_samples(const std::vector<std::uint32_t>& samples);

}  // namespace qarena
