#include "qarena/sampler.hpp"

#include <cmath>

#include "qarena/errors.hpp"

namespace qarena {

SampleReport rejection_sample(const GibbsGuess& g, SplitRng& rng, std::int64_t trial_cap) {
  if (trial_cap < 1) throw ParameterError("trial_cap must be >= 1");
  const std::uint64_t space = std::uint64_t{1} << g.width();
  for (std::int64_t trial = 1; trial <= trial_cap; ++trial) {
    const std::uint32_t x = static_cast<std::uint32_t>(rng.next_below(space));
    const double accept = std::exp(-g.neg_log_weight(x));
    if (rng.next_double() < accept) {
      return SampleReport{BitString(x, g.width()), trial, 1.0 / static_cast<double>(trial)};
    }
  }
  throw BudgetError("rejection sampler exhausted " + std::to_string(trial_cap) + " trials");
}

SampleReport sample_uniform_on_L(const Witness& f, SplitRng& rng, std::int64_t trial_cap) {
  if (trial_cap < 1) throw ParameterError("trial_cap must be >= 1");
  if (!f.is_binary()) throw ParameterError("acceptance witness must be binary");
  const std::uint64_t space = std::uint64_t{1} << f.width();
  for (std::int64_t trial = 1; trial <= trial_cap; ++trial) {
    const std::uint32_t x = static_cast<std::uint32_t>(rng.next_below(space));
    if (f(x) == 1.0) {
      return SampleReport{BitString(x, f.width()), trial, 1.0 / static_cast<double>(trial)};
    }
  }
  throw BudgetError("acceptance-set sampler exhausted " + std::to_string(trial_cap) + " trials");
}

std::int64_t default_trial_cap(double eps, int rounds, double factor) {
  if (!(factor > 0.0)) throw ParameterError("factor must be positive");
  const double cap = std::ceil(factor * std::exp(0.25 * eps * static_cast<double>(rounds)));
  if (cap > 9.0e18) return std::int64_t{9'000'000'000'000'000'000};
  return static_cast<std::int64_t>(cap);
}

}  // namespace qarena
