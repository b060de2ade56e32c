#include "qarena/divergence.hpp"

#include <cmath>
#include <limits>

#include "qarena/errors.hpp"

namespace qarena {

namespace {
void check_same_width(const DensePmf& a, const DensePmf& b) {
  if (a.width() != b.width()) {
    throw DimensionError("pmf widths differ: " + std::to_string(a.width()) + " vs " +
                         std::to_string(b.width()));
  }
}
}  // namespace

double tv_distance(const DensePmf& a, const DensePmf& b) {
  check_same_width(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

double relative_entropy(const DensePmf& a, const DensePmf& b) {
  check_same_width(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = a[i];
    if (p == 0.0) continue;
    const double q = b[i];
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    sum += p * (std::log(p) - std::log(q));
  }
  // Rounding can leave a tiny negative residue when a == b.
  return sum < 0.0 && sum > -1e-12 ? 0.0 : sum;
}

double shannon_entropy(const DensePmf& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = a[i];
    if (p > 0.0) sum -= p * std::log(p);
  }
  return sum < 0.0 ? 0.0 : sum;
}

double collision_probability(const DensePmf& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * a[i];
  return sum;
}

double renyi2_entropy(const DensePmf& a) {
  const double r = -std::log(collision_probability(a));
  return r < 0.0 ? 0.0 : r;
}

DivergenceReport divergence_report(const DensePmf& a, const DensePmf& b) {
  DivergenceReport rep;
  rep.tv = tv_distance(a, b);
  rep.kl_nats = relative_entropy(a, b);
  rep.shannon_nats = shannon_entropy(a);
  rep.renyi2_nats = renyi2_entropy(a);
  return rep;
}

std::int64_t hoeffding_samples(double eps, double delta) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must be in (0, 1]");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must be in (0, 1)");
  return static_cast<std::int64_t>(std::ceil(2.0 / (eps * eps) * std::log(2.0 / delta)));
}

}  // namespace qarena
