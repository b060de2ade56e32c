#pragma once

#include <cstdint>
#include <string>

#include "qarena/density.hpp"
#include "qarena/rng.hpp"

namespace qarena {

/// Contraction coefficient of a doubly stochastic channel with respect to the
/// maximally mixed state: D(Phi(rho) || I/d) <= (1 - alpha) D(rho || I/d).
/// Only the local-depolarizing value is built in; anything else is taken on
/// the caller's authority.
struct SdpiSpec {
  double alpha = 0.0;
  std::string source;

  static SdpiSpec depolarizing(double p);
  static SdpiSpec user_supplied(double alpha);
};

/// alpha for a layer of one-qubit depolarizing channels: 1 - (1-p)^2.
double depolarizing_alpha(double p);

/// Relative-entropy budget (1 - alpha)^(D+1) * n * ln 2 nats for a depth-D
/// circuit with one noise layer before each unitary layer and one before
/// measurement.
double entropy_budget(int n, int depth, double alpha);

/// Round bound ceil(16 * budget / eps^2).
std::int64_t iteration_bound(double eps, double budget_nats);

/// Per-sample evaluation bound exp(4 * budget / eps); +infinity on overflow.
double sampling_cost_bound(double eps, double budget_nats);

struct NoiseBudgetReport {
  int width = 0;
  int depth = 0;
  double alpha = 0.0;
  double entropy_budget_nats = 0.0;
  std::int64_t iteration_bound = 0;
  double sampling_cost_bound = 0.0;
};

NoiseBudgetReport noise_budget_report(int n, int depth, double alpha, double eps);

/// Numerical check of the contraction inequality on random pure and mixed
/// states, using D(rho || I/d) = n ln2 - S(rho).
struct SdpiReport {
  double alpha = 0.0;
  double worst_ratio = 0.0;
  int states_checked = 0;
  bool holds = false;
};

SdpiReport verify_sdpi(const NoiseSpec& noise, int n, int trials, SplitRng& rng);

/// Exact noisy output divergence against the layer-counting budget, plus the
/// implied game-length caps with and without noise.
struct ChainCheckReport {
  int width = 0;
  int depth = 0;
  double rate = 0.0;
  double alpha = 0.0;
  double budget_nats = 0.0;
  double exact_divergence_nats = 0.0;
  bool holds = false;
  std::int64_t budget_iteration_cap = 0;
  std::int64_t noiseless_iteration_cap = 0;
};

ChainCheckReport noisy_chain_check(const Circuit& c, const NoiseSpec& noise, double eps);

}  // namespace qarena
