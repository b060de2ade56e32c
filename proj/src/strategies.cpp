#include "qarena/strategies.hpp"

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"

namespace qarena {

std::string MirrorDescentAlice::name() const { return "mirror-descent"; }

void MirrorDescentAlice::reset(int width, const GameConfig& config) {
  guess_.emplace(width, config.eps);
  trial_cap_factor_ = config.trial_cap_factor;
}

DensePmf MirrorDescentAlice::disclose() const { return exact_pmf(*guess_).pmf; }

std::vector<std::uint32_t> MirrorDescentAlice::draw(std::int64_t count, SplitRng& rng) {
  const std::int64_t cap =
      default_trial_cap(guess_->eps(), guess_->rounds(), trial_cap_factor_);
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    out.push_back(rejection_sample(*guess_, rng, cap).sample.bits);
  }
  return out;
}

void MirrorDescentAlice::observe_accepted(const Witness& f) { guess_ = guess_->updated(f); }

std::optional<GibbsGuess> MirrorDescentAlice::guess() const { return guess_; }

StaticAlice::StaticAlice(std::optional<DensePmf> pmf, std::string label)
    : fixed_(std::move(pmf)), label_(std::move(label)) {}

std::string StaticAlice::name() const { return "static:" + label_; }

void StaticAlice::reset(int width, const GameConfig&) {
  active_ = fixed_.has_value() ? *fixed_ : DensePmf::uniform(width);
  if (active_->width() != width) throw DimensionError("static pmf width differs from the game");
  sampler_.emplace(*active_);
}

DensePmf StaticAlice::disclose() const { return *active_; }

std::vector<std::uint32_t> StaticAlice::draw(std::int64_t count, SplitRng& rng) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back((*sampler_)(rng));
  return out;
}

void StaticAlice::observe_accepted(const Witness&) {}

std::string OptimalIndicatorBob::name() const { return "optimal-indicator"; }

void OptimalIndicatorBob::reset(int, const GameConfig& config, const DensePmf& target) {
  target_ = target;
  eps_ = config.eps;
}

std::optional<Witness> OptimalIndicatorBob::propose(const DensePmf& alice_disclosed, int,
                                                    SplitRng&) {
  auto [witness, gap] = optimal_distinguisher(alice_disclosed, *target_);
  if (gap < eps_) return std::nullopt;  // nothing separates the distributions anymore
  return witness;
}

HeavySetBob::HeavySetBob(std::optional<double> theta) : theta_(theta) {}

std::string HeavySetBob::name() const { return "heavy-set"; }

void HeavySetBob::reset(int, const GameConfig&, const DensePmf& target) {
  const Witness heavy =
      theta_.has_value() ? heavy_set_witness(target, *theta_) : heavy_set_witness(target);
  witness_ = complement(heavy);
}

std::optional<Witness> HeavySetBob::propose(const DensePmf&, int, SplitRng&) { return witness_; }

CliffordBob::CliffordBob(std::vector<Gate> gates) : gates_(std::move(gates)) {}

std::string CliffordBob::name() const { return "clifford"; }

void CliffordBob::reset(int width, const GameConfig&, const DensePmf&) {
  z_string_ = find_z_string(tableau_from_clifford(gates_, width));
  if (z_string_.has_value()) {
    witness_ = complement(z_string_witness(width, *z_string_));
  } else {
    witness_.reset();
  }
}

std::optional<Witness> CliffordBob::propose(const DensePmf&, int, SplitRng&) { return witness_; }

MaxCutBob::MaxCutBob(MaxCutGraph graph) : graph_(std::move(graph)) {}

std::string MaxCutBob::name() const { return "maxcut"; }

void MaxCutBob::reset(int width, const GameConfig&, const DensePmf&) {
  if (graph_.vertices != width) throw DimensionError("graph order differs from the game width");
  witness_ = complement(maxcut_witness(graph_));
}

std::optional<Witness> MaxCutBob::propose(const DensePmf&, int, SplitRng&) { return witness_; }

}  // namespace qarena
