#pragma once

#include <cstdint>
#include <vector>

#include "qarena/pmf.hpp"
#include "qarena/witness.hpp"

namespace qarena {

/// Exponential-weights guess mu_t(x) = exp(-(eps/4) sum_i f_i(x)) / Z_t,
/// represented implicitly by (eps, witness list). Sampling never needs the
/// partition function; Z_t is only materialized by exact_pmf. An empty list
/// is the uniform distribution.
class GibbsGuess {
 public:
  GibbsGuess(int width, double eps);

  /// New guess with f appended (the learning-rate eps/4 update).
  GibbsGuess updated(Witness f) const;

  /// H_t(x) = (eps/4) sum_i f_i(x), in [0, t*eps/4].
  double neg_log_weight(std::uint32_t x) const;

  int width() const { return width_; }
  double eps() const { return eps_; }
  int rounds() const { return static_cast<int>(witnesses_.size()); }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

 private:
  int width_;
  double eps_;
  std::vector<Witness> witnesses_;
};

struct GibbsTable {
  DensePmf pmf;
  double partition = 0.0;  // Z_t = sum_x exp(-H_t(x)); 2^n at t = 0
};

/// Materializes the full table (desk scale only).
GibbsTable exact_pmf(const GibbsGuess& g);

/// Round budget ceil(16 * d_ref / eps^2) for a starting relative entropy of
/// d_ref nats.
std::int64_t iteration_cap(double d_ref_nats, double eps);

/// One checkpoint of the divergence-decay guarantee: after t rounds with
/// true-gap >= eps witnesses, D(target || mu_t) <= D(target || uniform)
/// - t eps^2 / 16, and the residual bounds the total variation via
/// sqrt(2 * residual).
struct ProgressEntry {
  int round = 0;
  double claimed_gap = 0.0;        // filled by the caller when known
  double divergence_nats = 0.0;    // exact D(target || mu_t)
  double divergence_bound_nats = 0.0;
  double tv_bound = 0.0;
  bool bound_satisfied = false;
};

struct ProgressLedger {
  double initial_divergence_nats = 0.0;  // D(target || uniform)
  std::vector<ProgressEntry> entries;
};

ProgressEntry check_progress(const GibbsGuess& g, const DensePmf& target);

}  // namespace qarena
