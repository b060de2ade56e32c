#pragma once

#include <cstdint>

#include "qarena/pmf.hpp"

namespace qarena {

// All entropic quantities are in nats. The exponential-weights update uses
// exp(), so natural-log divergences are the convention under which every
// round-count formula in this repository is exact; bits are display-only.

/// Total variation distance, (1/2) sum_x |a(x) - b(x)|.
double tv_distance(const DensePmf& a, const DensePmf& b);

/// Relative entropy D(a || b) = sum_x a(x) (ln a(x) - ln b(x)), with
/// 0 ln 0 := 0. Returns +infinity when a's support is not contained in b's.
double relative_entropy(const DensePmf& a, const DensePmf& b);

/// Shannon entropy -sum a ln a.
double shannon_entropy(const DensePmf& a);

/// Collision probability sum_x a(x)^2.
double collision_probability(const DensePmf& a);

/// Order-2 Renyi entropy -ln sum_x a(x)^2.
double renyi2_entropy(const DensePmf& a);

/// Summary of the standard distinguishability measures for a pair (a, b).
/// Entropies are those of the first argument.
struct DivergenceReport {
  double tv = 0.0;
  double kl_nats = 0.0;
  double shannon_nats = 0.0;
  double renyi2_nats = 0.0;
};

DivergenceReport divergence_report(const DensePmf& a, const DensePmf& b);

/// Samples guaranteeing an empirical mean of a [0,1]-valued function within
/// eps/2 of truth with probability >= 1 - delta (two-sided Hoeffding):
/// ceil(2 eps^-2 ln(2/delta)). Requires eps in (0,1], delta in (0,1).
std::int64_t hoeffding_samples(double eps, double delta);

}  // namespace qarena
