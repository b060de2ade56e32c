#pragma once

#include <optional>

#include "qarena/game.hpp"
#include "qarena/sampler.hpp"
#include "qarena/stab.hpp"

namespace qarena {

/// Exponential-weights learner. Discloses the exact table of its implicit
/// Gibbs guess (desk scale), serves referee batches by rejection sampling
/// under the configured trial budget, and folds every accepted witness into
/// the next guess.
class MirrorDescentAlice : public AliceStrategy {
 public:
  std::string name() const override;
  void reset(int width, const GameConfig& config) override;
  DensePmf disclose() const override;
  std::vector<std::uint32_t> draw(std::int64_t count, SplitRng& rng) override;
  void observe_accepted(const Witness& f) override;
  std::optional<GibbsGuess> guess() const override;

 private:
  std::optional<GibbsGuess> guess_;
  double trial_cap_factor_ = 20.0;
};

/// Never updates; samples its fixed distribution exactly.
class StaticAlice : public AliceStrategy {
 public:
  /// Uniform when pmf is empty.
  explicit StaticAlice(std::optional<DensePmf> pmf = std::nullopt, std::string label = "uniform");

  std::string name() const override;
  void reset(int width, const GameConfig& config) override;
  DensePmf disclose() const override;
  std::vector<std::uint32_t> draw(std::int64_t count, SplitRng& rng) override;
  void observe_accepted(const Witness& f) override;

 private:
  std::optional<DensePmf> fixed_;
  std::string label_;
  std::optional<DensePmf> active_;
  std::optional<CdfSampler> sampler_;
};

/// Plays the optimal indicator against the disclosed distribution and
/// concedes as soon as the exact distance falls below eps. Its claimed gap
/// always equals the exact total variation.
class OptimalIndicatorBob : public BobStrategy {
 public:
  std::string name() const override;
  void reset(int width, const GameConfig& config, const DensePmf& target) override;
  std::optional<Witness> propose(const DensePmf& alice_disclosed, int t, SplitRng& rng) override;

 private:
  std::optional<DensePmf> target_;
  double eps_ = 0.0;
};

/// Proposes the complement of the heavy-set indicator of its device
/// distribution (large where the learner over-weights light strings), round
/// after round.
class HeavySetBob : public BobStrategy {
 public:
  explicit HeavySetBob(std::optional<double> theta = std::nullopt);

  std::string name() const override;
  void reset(int width, const GameConfig& config, const DensePmf& target) override;
  std::optional<Witness> propose(const DensePmf& alice_disclosed, int t, SplitRng& rng) override;

 private:
  std::optional<double> theta_;
  std::optional<Witness> witness_;
};

/// Runs the tableau of its Clifford word, extracts the deterministic parity
/// and plays its complemented witness; concedes when no parity exists.
class CliffordBob : public BobStrategy {
 public:
  explicit CliffordBob(std::vector<Gate> gates);

  std::string name() const override;
  void reset(int width, const GameConfig& config, const DensePmf& target) override;
  std::optional<Witness> propose(const DensePmf& alice_disclosed, int t, SplitRng& rng) override;

  const std::optional<PauliZString>& z_string() const { return z_string_; }

 private:
  std::vector<Gate> gates_;
  std::optional<PauliZString> z_string_;
  std::optional<Witness> witness_;
};

/// Plays 1 - f_G every round: the learner is pushed toward ever better cuts.
class MaxCutBob : public BobStrategy {
 public:
  explicit MaxCutBob(MaxCutGraph graph);

  std::string name() const override;
  void reset(int width, const GameConfig& config, const DensePmf& target) override;
  std::optional<Witness> propose(const DensePmf& alice_disclosed, int t, SplitRng& rng) override;

 private:
  MaxCutGraph graph_;
  std::optional<Witness> witness_;
};

}  // namespace qarena
