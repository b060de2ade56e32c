#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qarena/rng.hpp"

namespace qarena {

/// Hard cap on the number of bits: dense tables of 2^20 doubles (8 MB) are
/// the largest objects this engine materializes.
inline constexpr int kMaxWidth = 20;

/// One n-bit string, stored in the low bits of a word. Bit i is qubit i;
/// to_string prints qubit 0 first.
struct BitString {
  std::uint32_t bits = 0;
  int width = 0;

  BitString() = default;
  BitString(std::uint32_t bits_in, int width_in);

  bool bit(int i) const { return (bits >> i) & 1u; }
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

/// Parity <mask, x> over F2.
inline int parity(std::uint32_t mask, std::uint32_t x) {
  return __builtin_parity(mask & x);
}

/// Explicit probability table over n-bit strings. Entries are validated to be
/// nonnegative and to sum to 1 within 1e-9 at construction; every producer in
/// the repository goes through this check.
class DensePmf {
 public:
  DensePmf(int width, std::vector<double> probs);

  static DensePmf uniform(int width);
  static DensePmf point_mass(int width, std::uint32_t x);
  /// Normalizes nonnegative weights to a pmf. Total weight must be positive.
  static DensePmf from_weights(int width, const std::vector<double>& weights);

  int width() const { return width_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  friend bool operator==(const DensePmf&, const DensePmf&) = default;

 private:
  int width_;
  std::vector<double> probs_;
};

/// Inverse-CDF sampler over a fixed pmf (binary search per draw).
class CdfSampler {
 public:
  explicit CdfSampler(const DensePmf& pmf);
  std::uint32_t operator()(SplitRng& rng) const;
  int width() const { return width_; }

 private:
  int width_;
  std::vector<double> cdf_;
};

/// Histogram of samples as a pmf (empirical distribution).
DensePmf empirical_pmf(int width, const std::vector<std::uint32_t>& samples);

}  // namespace qarena
