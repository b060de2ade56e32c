#include "qarena/pmf.hpp"

#include <algorithm>
#include <cmath>

#include "qarena/errors.hpp"

namespace qarena {

namespace {
void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw CapacityError("width " + std::to_string(width) + " outside [1, " +
                        std::to_string(kMaxWidth) + "]");
  }
}
}  // namespace

BitString::BitString(std::uint32_t bits_in, int width_in) : bits(bits_in), width(width_in) {
  check_width(width);
  if (width < 32 && (bits >> width) != 0) {
    throw ParameterError("bit value exceeds width");
  }
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

DensePmf::DensePmf(int width, std::vector<double> probs) : width_(width), probs_(std::move(probs)) {
  check_width(width_);
  const std::size_t expected = std::size_t{1} << width_;
  if (probs_.size() != expected) {
    throw DimensionError("pmf table has " + std::to_string(probs_.size()) + " entries, expected " +
                         std::to_string(expected));
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidityError("pmf entry negative or non-finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidityError("pmf sums to " + std::to_string(total));
  }
}

DensePmf DensePmf::uniform(int width) {
  check_width(width);
  const std::size_t n = std::size_t{1} << width;
  return DensePmf(width, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DensePmf DensePmf::point_mass(int width, std::uint32_t x) {
  check_width(width);
  const std::size_t n = std::size_t{1} << width;
  if (x >= n) throw ParameterError("point mass outside table");
  std::vector<double> p(n, 0.0);
  p[x] = 1.0;
  return DensePmf(width, std::move(p));
}

DensePmf DensePmf::from_weights(int width, const std::vector<double>& weights) {
  check_width(width);
  const std::size_t expected = std::size_t{1} << width;
  if (weights.size() != expected) throw DimensionError("weight table size mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidityError("negative or non-finite weight");
    total += w;
  }
  if (total <= 0.0) throw ValidityError("total weight not positive");
  std::vector<double> p(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) p[i] = weights[i] / total;
  // Kill the last rounding crumb so the constructor's sum check always holds.
  double sum = 0.0;
  for (double v : p) sum += v;
  if (sum != 1.0 && sum > 0.0) {
    for (double& v : p) v /= sum;
  }
  return DensePmf(width, std::move(p));
}

CdfSampler::CdfSampler(const DensePmf& pmf) : width_(pmf.width()), cdf_(pmf.size()) {
  double run = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    run += pmf[i];
    cdf_[i] = run;
  }
  cdf_.back() = 1.0;
}

std::uint32_t CdfSampler::operator()(SplitRng& rng) const {
  const double u = rng.next_double();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
  return static_cast<std::uint32_t>(std::min(i, cdf_.size() - 1));
}

DensePmf empirical_pmf(int width, const std::vector<std::uint32_t>& samples) {
  check_width(width);
  if (samples.empty()) throw ParameterError("no samples");
  std::vector<double> counts(std::size_t{1} << width, 0.0);
  for (std::uint32_t s : samples) {
    if (s >= counts.size()) throw ParameterError("sample outside table");
    counts[s] += 1.0;
  }
  return DensePmf::from_weights(width, counts);
}

}  // namespace qarena
