#include "qarena/mirror.hpp"

#include <cmath>

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"

namespace qarena {

GibbsGuess::GibbsGuess(int width, double eps) : width_(width), eps_(eps) {
  if (width < 1 || width > kMaxWidth) throw CapacityError("guess width outside [1, 20]");
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must be in (0, 1]");
}

GibbsGuess GibbsGuess::updated(Witness f) const {
  if (f.width() != width_) throw DimensionError("witness width differs from guess width");
  GibbsGuess next = *this;
  next.witnesses_.push_back(std::move(f));
  return next;
}

double GibbsGuess::neg_log_weight(std::uint32_t x) const {
  double h = 0.0;
  for (const Witness& f : witnesses_) h += f(x);
  return 0.25 * eps_ * h;
}

GibbsTable exact_pmf(const GibbsGuess& g) {
  const std::size_t n = std::size_t{1} << g.width();
  std::vector<double> w(n);
  double z = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    w[x] = std::exp(-g.neg_log_weight(static_cast<std::uint32_t>(x)));
    z += w[x];
  }
  return GibbsTable{DensePmf::from_weights(g.width(), w), z};
}

std::int64_t iteration_cap(double d_ref_nats, double eps) {
  if (!(d_ref_nats >= 0.0)) throw ParameterError("reference divergence must be >= 0");
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  return static_cast<std::int64_t>(std::ceil(16.0 * d_ref_nats / (eps * eps)));
}

ProgressEntry check_progress(const GibbsGuess& g, const DensePmf& target) {
  if (g.width() != target.width()) throw DimensionError("target width differs from guess width");
  const DensePmf uniform = DensePmf::uniform(g.width());
  const double d0 = relative_entropy(target, uniform);
  const double dt = relative_entropy(target, exact_pmf(g).pmf);
  const double t = static_cast<double>(g.rounds());
  ProgressEntry e;
  e.round = g.rounds();
  e.divergence_nats = dt;
  e.divergence_bound_nats = d0 - t * g.eps() * g.eps() / 16.0;
  e.tv_bound = e.divergence_bound_nats > 0.0 ? std::sqrt(2.0 * e.divergence_bound_nats) : 0.0;
  e.bound_satisfied = dt <= e.divergence_bound_nats + 1e-9;
  return e;
}

}  // namespace qarena
