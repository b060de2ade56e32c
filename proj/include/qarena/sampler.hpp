#pragma once

#include <cstdint>

#include "qarena/mirror.hpp"
#include "qarena/rng.hpp"
#include "qarena/witness.hpp"

namespace qarena {

struct SampleReport {
  BitString sample;
  std::int64_t trials_used = 0;
  double acceptance_estimate = 0.0;  // 1 / trials_used
};

/// One sample from the implicit Gibbs distribution by rejection against the
/// uniform proposal: accept x with probability exp(-H_t(x)). The accepted
/// sample is exactly mu_t-distributed, the expected trial count is at most
/// exp(eps * t / 4), and the only per-trial work is one H_t evaluation; the
/// partition function never enters the loop. Throws BudgetError when
/// trial_cap proposals were all rejected.
SampleReport rejection_sample(const GibbsGuess& g, SplitRng& rng, std::int64_t trial_cap);

/// Uniform sample from L = {x : f(x) = 1} for a binary witness, by rejection
/// of uniform proposals; expected trials 2^n / |L|.
SampleReport sample_uniform_on_L(const Witness& f, SplitRng& rng, std::int64_t trial_cap);

/// Generous per-sample cap: ceil(factor * exp(eps * rounds / 4)). At the
/// default factor the chance of a spurious budget loss is below 1e-8 per
/// sample; the cap doubles as the learner's in-game resource-budget rule.
std::int64_t default_trial_cap(double eps, int rounds, double factor = 20.0);

}  // namespace qarena
