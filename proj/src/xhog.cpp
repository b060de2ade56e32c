#include "qarena/xhog.hpp"

#include <algorithm>
#include <cmath>

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"

namespace qarena {

void XhogParams::validate() const {
  if (k < xhog_sample_bound(b, s)) {
    throw ParameterError("k = " + std::to_string(k) + " below the admissible sample bound");
  }
}

double xeb_fidelity(const DensePmf& mu, const DensePmf& nu) {
  if (mu.width() != nu.width()) throw DimensionError("pmf width mismatch");
  double overlap = 0.0;
  for (std::size_t x = 0; x < mu.size(); ++x) overlap += nu[x] * mu[x];
  return static_cast<double>(mu.size()) * overlap - 1.0;
}

XhogScore score_samples(const std::vector<std::uint32_t>& samples, const DensePmf& nu, double b) {
  if (samples.empty()) throw ParameterError("no samples to score");
  std::vector<std::uint32_t> distinct = samples;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  double total = 0.0;
  for (std::uint32_t z : distinct) {
    if (z >= nu.size()) throw ParameterError("sample outside reference table");
    total += nu[z];
  }
  XhogScore score;
  score.distinct_count = static_cast<std::int64_t>(distinct.size());
  score.mean_prob = total / static_cast<double>(distinct.size());
  score.passes_b = score.mean_prob >= b / static_cast<double>(nu.size());
  score.xeb = static_cast<double>(nu.size()) * score.mean_prob - 1.0;
  return score;
}

std::int64_t xhog_sample_bound(double b, double s) {
  if (!(b > 1.0)) throw ParameterError("b must exceed 1");
  const double denom = ((2.0 * s - 1.0) * b - 1.0) * (b - 1.0);
  if (!(denom > 0.0)) throw ParameterError("(2s-1)b must exceed 1");
  return static_cast<std::int64_t>(std::ceil(1.0 / denom));
}

SpoofResult spoof_xhog(const Witness& f, const DensePmf& nu, std::int64_t k, SplitRng& rng,
                       double certified_eps) {
  if (f.width() != nu.width()) throw DimensionError("witness/pmf width mismatch");
  if (!f.is_binary()) throw ParameterError("spoofing witness must be binary");
  if (k < 1) throw ParameterError("k must be >= 1");
  if (!(certified_eps >= 0.0)) throw ParameterError("certified gap must be >= 0");

  const DensePmf uniform = DensePmf::uniform(nu.width());
  const double gap = exact_gap(f, nu, uniform);
  if (gap + 1e-12 < certified_eps) {
    throw ParameterError("certified gap does not hold: exact gap " + std::to_string(gap));
  }

  std::int64_t set_size = 0;
  for (std::size_t x = 0; x < nu.size(); ++x) {
    if (f(static_cast<std::uint32_t>(x)) == 1.0) ++set_size;
  }
  if (set_size < k) {
    throw ParameterError("acceptance set has " + std::to_string(set_size) +
                         " members, fewer than k");
  }

  // Collect until k distinct; duplicates are redrawn. The cap is sized from
  // the geometric acceptance rate plus coupon-collector headroom.
  const double accept_rate = static_cast<double>(set_size) / static_cast<double>(nu.size());
  const std::int64_t trial_cap =
      static_cast<std::int64_t>(std::ceil(40.0 * static_cast<double>(k) / accept_rate)) + 1000;

  SpoofResult result;
  std::vector<bool> seen(nu.size(), false);
  std::int64_t trials_left = trial_cap;
  const std::uint64_t space = nu.size();
  while (static_cast<std::int64_t>(result.samples.size()) < k) {
    if (trials_left <= 0) throw BudgetError("spoofer exhausted its trial budget");
    std::int64_t used = 0;
    std::uint32_t x = 0;
    for (; used < trials_left; ) {
      ++used;
      x = static_cast<std::uint32_t>(rng.next_below(space));
      if (f(x) == 1.0) break;
    }
    result.total_trials += used;
    trials_left -= used;
    if (f(x) != 1.0) throw BudgetError("spoofer exhausted its trial budget");
    ++result.accepted_draws;
    if (!seen[x]) {
      seen[x] = true;
      result.samples.push_back(x);
    }
  }
  result.score = score_samples(result.samples, nu, 1.0 + certified_eps);
  return result;
}

HeavyMassCheck heavy_mass_size_bound(const DensePmf& nu, const std::vector<bool>& set,
                                     double delta) {
  if (set.size() != nu.size()) throw DimensionError("set size differs from table");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must be in (0, 1)");
  HeavyMassCheck check;
  for (std::size_t x = 0; x < nu.size(); ++x) {
    if (set[x]) {
      check.mass += nu[x];
      ++check.set_size;
    }
  }
  const double n_ln2 = static_cast<double>(nu.width()) * std::log(2.0);
  const double c = std::exp(n_ln2 - renyi2_entropy(nu));
  check.s2_lower_bound = check.mass * check.mass / c * static_cast<double>(nu.size());
  check.design_lower_bound =
      check.mass * check.mass * (delta / 3.0) * static_cast<double>(nu.size());
  check.holds = static_cast<double>(check.set_size) >= check.s2_lower_bound - 1e-9;
  return check;
}

}  // namespace qarena
