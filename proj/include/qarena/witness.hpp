#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "qarena/pmf.hpp"

namespace qarena {

enum class CostClass { kPolytime, kTableBacked };

/// Undirected graph for cut functions. max_degree is computed from the edge
/// list at validation time.
struct MaxCutGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int max_degree = 0;

  /// Checks for self-loops, duplicate edges and out-of-range endpoints and
  /// fills in max_degree. Requires at least one edge.
  static MaxCutGraph validated(int vertices, std::vector<std::pair<int, int>> edges);

  friend bool operator==(const MaxCutGraph&, const MaxCutGraph&) = default;
};

/// Random Delta-regular graph on n vertices (pairing model, resampled until
/// simple). n * degree must be even.
MaxCutGraph random_regular_graph(int vertices, int degree, std::uint64_t seed);

struct DenseTableForm {
  std::vector<double> values;  // 2^n entries in [0,1]
  friend bool operator==(const DenseTableForm&, const DenseTableForm&) = default;
};

struct IndicatorForm {
  std::vector<bool> members;  // 2^n bits
  friend bool operator==(const IndicatorForm&, const IndicatorForm&) = default;
};

/// f(x) = (1 + sign * (-1)^<z_mask, x>) / 2.
struct ParityForm {
  std::uint32_t z_mask = 0;
  int sign = +1;
  friend bool operator==(const ParityForm&, const ParityForm&) = default;
};

/// Normalized cut count, optionally complemented (1 - f).
struct MaxCutForm {
  MaxCutGraph graph;
  bool complemented = false;
  friend bool operator==(const MaxCutForm&, const MaxCutForm&) = default;
};

/// Indicator of {x : reference(x) >= threshold}, optionally complemented.
struct HeavySetForm {
  std::vector<double> reference;  // 2^n probabilities
  double threshold = 0.0;
  bool complemented = false;
  friend bool operator==(const HeavySetForm&, const HeavySetForm&) = default;
};

/// A function {0,1}^n -> [0,1] used to separate two distributions by
/// expectation gap. Witnesses carry no orientation; each consumer states
/// which side must exceed.
class Witness {
 public:
  using Body = std::variant<DenseTableForm, IndicatorForm, ParityForm, MaxCutForm, HeavySetForm>;

  Witness(int width, Body body);

  int width() const { return width_; }
  CostClass cost_class() const;
  const Body& body() const { return body_; }
  bool is_binary() const { return binary_; }

  /// Value in [0,1]; trusts that x fits the width.
  double operator()(std::uint32_t x) const;

  /// Width-checked evaluation.
  double evaluate(const BitString& x) const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  int width_;
  Body body_;
  bool binary_;
};

Witness constant_witness(int width, double value);
Witness indicator_witness(int width, std::vector<bool> members);
Witness parity_witness(int width, std::uint32_t z_mask, int sign);

/// f_G(x) = (1/(n*Delta)) * #cut edges; range is a subset of [0,1].
Witness maxcut_witness(const MaxCutGraph& graph);

/// Indicator of the heavy set {x : reference(x) >= theta}. The default
/// theta = 2^-n selects strings of at-least-uniform weight.
Witness heavy_set_witness(const DensePmf& reference, double theta);
Witness heavy_set_witness(const DensePmf& reference);

/// 1 - f, exact for every form.
Witness complement(const Witness& f);

/// sum_x p(x) f(x).
double exact_mean(const Witness& f, const DensePmf& p);

/// E_a(f) - E_b(f).
double exact_gap(const Witness& f, const DensePmf& a, const DensePmf& b);

/// Indicator of S = {x : a(x) >= b(x)} together with its gap
/// E_a(chi_S) - E_b(chi_S), which equals tv_distance(a, b). This is the
/// optimal guessing strategy between the two distributions.
std::pair<Witness, double> optimal_distinguisher(const DensePmf& a, const DensePmf& b);

struct BinarizeResult {
  Witness binary;
  double guaranteed_gap = 0.0;  // eps^2 / 8
  double achieved_gap = 0.0;    // exact gap of the returned indicator
  double threshold = 0.0;       // accepted level k0/(2m)
};

/// Rounds f up to multiples of 1/(2m) with m = ceil(1/eps), scans all 2m
/// level sets and returns the indicator with the largest exact gap
/// E_nu(f') - E_uniform(f'). The caller asserts that f itself has gap >= eps
/// against (nu, uniform); if no level set reaches eps^2/8 the reduction
/// fails and a ReductionError reports the violated precondition.
BinarizeResult binarize(const Witness& f, double eps, const DensePmf& nu);

}  // namespace qarena
