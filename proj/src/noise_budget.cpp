#include "qarena/noise_budget.hpp"

#include <cmath>
#include <limits>

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"

namespace qarena {

SdpiSpec SdpiSpec::depolarizing(double p) {
  return SdpiSpec{depolarizing_alpha(p), "depolarizing(p=" + std::to_string(p) + ")"};
}

SdpiSpec SdpiSpec::user_supplied(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must be in (0, 1]");
  return SdpiSpec{alpha, "user-supplied"};
}

double depolarizing_alpha(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("depolarizing rate must be in [0, 1]");
  return p * (2.0 - p);
}

double entropy_budget(int n, int depth, double alpha) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (depth < 0) throw ParameterError("depth must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must be in [0, 1]");
  return std::pow(1.0 - alpha, depth + 1) * static_cast<double>(n) * std::log(2.0);
}

std::int64_t iteration_bound(double eps, double budget_nats) {
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(budget_nats >= 0.0)) throw ParameterError("budget must be >= 0");
  return static_cast<std::int64_t>(std::ceil(16.0 * budget_nats / (eps * eps)));
}

double sampling_cost_bound(double eps, double budget_nats) {
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(budget_nats >= 0.0)) throw ParameterError("budget must be >= 0");
  const double exponent = 4.0 * budget_nats / eps;
  if (exponent > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(exponent);
}

NoiseBudgetReport noise_budget_report(int n, int depth, double alpha, double eps) {
  NoiseBudgetReport rep;
  rep.width = n;
  rep.depth = depth;
  rep.alpha = alpha;
  rep.entropy_budget_nats = entropy_budget(n, depth, alpha);
  rep.iteration_bound = iteration_bound(eps, rep.entropy_budget_nats);
  rep.sampling_cost_bound = sampling_cost_bound(eps, rep.entropy_budget_nats);
  return rep;
}

namespace {

Eigen::MatrixXcd random_pure_state(int dim, SplitRng& rng) {
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  psi.normalize();
  return psi * psi.adjoint();
}

Eigen::MatrixXcd random_mixed_state(int dim, SplitRng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  }
  Eigen::MatrixXcd w = g * g.adjoint();
  return w / w.trace().real();
}

}  // namespace

SdpiReport verify_sdpi(const NoiseSpec& noise, int n, int trials, SplitRng& rng) {
  if (n < 1 || n > 4) throw ParameterError("sdpi check supports n in [1, 4]");
  if (trials < 1) throw ParameterError("trials must be >= 1");

  const double alpha = depolarizing_alpha(noise.rate);
  const double max_div = static_cast<double>(n) * std::log(2.0);
  const int dim = 1 << n;

  SdpiReport rep;
  rep.alpha = alpha;
  for (int t = 0; t < trials; ++t) {
    const bool pure = (t % 2) == 0;
    Eigen::MatrixXcd m = pure ? random_pure_state(dim, rng) : random_mixed_state(dim, rng);
    DensityMatrix rho = DensityMatrix::from_matrix(n, std::move(m));
    const double before = max_div - von_neumann_entropy(rho);
    DensityMatrix out = rho;
    out.apply_noise(noise);
    const double after = max_div - von_neumann_entropy(out);
    ++rep.states_checked;
    if (before < 1e-12) continue;  // maximally mixed: both sides vanish
    rep.worst_ratio = std::max(rep.worst_ratio, after / before);
  }
  rep.holds = rep.worst_ratio <= 1.0 - alpha + 1e-9;
  return rep;
}

ChainCheckReport noisy_chain_check(const Circuit& c, const NoiseSpec& noise, double eps) {
  if (c.width() > 8) throw CapacityError("chain check capped at 8 qubits");
  ChainCheckReport rep;
  rep.width = c.width();
  rep.depth = c.depth();
  rep.rate = noise.rate;
  rep.alpha = depolarizing_alpha(noise.rate);
  rep.budget_nats = entropy_budget(c.width(), c.depth(), rep.alpha);

  const DensePmf nu = noisy_output_distribution(c, noise);
  rep.exact_divergence_nats = relative_entropy(nu, DensePmf::uniform(c.width()));
  rep.holds = rep.exact_divergence_nats <= rep.budget_nats + 1e-9;
  rep.budget_iteration_cap = iteration_bound(eps, rep.budget_nats);
  rep.noiseless_iteration_cap =
      iteration_bound(eps, static_cast<double>(c.width()) * std::log(2.0));
  return rep;
}

}  // namespace qarena
