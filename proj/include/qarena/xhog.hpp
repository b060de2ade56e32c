#pragma once

#include <cstdint>
#include <vector>

#include "qarena/pmf.hpp"
#include "qarena/rng.hpp"
#include "qarena/witness.hpp"

namespace qarena {

/// Heavy-output-generation claim parameters: pass threshold b > 1, the
/// success-probability parameter s of the sample-count bound, and the number
/// of distinct samples k.
struct XhogParams {
  double b = 0.0;
  double s = 0.0;
  std::int64_t k = 0;

  /// b > 1 and k at least the admissible sample bound.
  void validate() const;
};

struct XhogScore {
  double mean_prob = 0.0;       // mean of nu(z) over distinct samples
  bool passes_b = false;        // mean_prob >= b / 2^n
  double xeb = 0.0;             // 2^n * mean_prob - 1
  std::int64_t distinct_count = 0;
};

/// Linear cross-entropy fidelity of mu against the reference nu:
/// 2^n * sum_x nu(x) mu(x) - 1. Zero for uniform mu, 2^n - 1 when both are
/// the same point mass.
double xeb_fidelity(const DensePmf& mu, const DensePmf& nu);

/// Scores samples against the exact reference distribution. Duplicates are
/// dropped first; the claim is about distinct strings.
XhogScore score_samples(const std::vector<std::uint32_t>& samples, const DensePmf& nu, double b);

/// Smallest admissible sample count ceil(1 / (((2s-1)b - 1)(b - 1))).
/// Requires b > 1 and (2s-1)b > 1.
std::int64_t xhog_sample_bound(double b, double s);

struct SpoofResult {
  std::vector<std::uint32_t> samples;  // k distinct members of L
  XhogScore score;                     // scored at b = 1 + eps
  std::int64_t total_trials = 0;       // witness evaluations spent
  std::int64_t accepted_draws = 0;     // accepted proposals incl. duplicates
};

/// Draws until k distinct members of L = {f = 1} are collected by uniform
/// rejection, then scores them. Verifies the certified gap
/// E_nu(f) - E_uniform(f) >= eps desk-scale before sampling, and that
/// |L| >= k. The resulting mean_prob is nu(L)/|L| >= (1+eps)/2^n when
/// averaged over all of L.
SpoofResult spoof_xhog(const Witness& f, const DensePmf& nu, std::int64_t k, SplitRng& rng,
                       double certified_eps);

/// Flat distributions cannot give large mass to small sets: with
/// c = exp(n ln2 - S2(nu)), a set of mass eta must have
/// |L| >= eta^2 * 2^n / c. Also reports the looser design-ensemble bound
/// eta^2 * (delta/3) * 2^n for comparison.
struct HeavyMassCheck {
  double mass = 0.0;
  std::int64_t set_size = 0;
  double s2_lower_bound = 0.0;
  double design_lower_bound = 0.0;
  bool holds = false;
};

HeavyMassCheck heavy_mass_size_bound(const DensePmf& nu, const std::vector<bool>& set,
                                     double delta);

}  // namespace qarena
