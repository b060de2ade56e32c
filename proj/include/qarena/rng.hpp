#pragma once

#include <cmath>
#include <cstdint>

namespace qarena {

/// Counter-based splittable pseudo-random generator.
///
/// Every value is a pure function of (key, counter), and `derive` produces an
/// independent child stream from (key, tag). This makes any sample in the
/// repository reproducible from a root seed plus the chain of derivation tags
/// (e.g. run seed -> round -> sample index), independent of evaluation order.
/// The mixer is the splitmix64 finalizer.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ kKeySalt)) {}

  /// Child stream that is statistically independent of this one.
  SplitRng derive(std::uint64_t tag) const {
    return SplitRng(FromKey{}, mix(key_ ^ mix(tag + kDeriveSalt)));
  }

  std::uint64_t next_u64() {
    counter_ += kGamma;
    return mix(key_ + counter_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), unbiased. bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t lo = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= lo) return r % bound;
    }
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Standard normal deviate (Box-Muller, pair cached).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  struct FromKey {};
  SplitRng(FromKey, std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kKeySalt = 0x243f6a8885a308d3ULL;
  static constexpr std::uint64_t kDeriveSalt = 0x452821e638d01377ULL;
  static constexpr double kPi = 3.14159265358979323846;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qarena
