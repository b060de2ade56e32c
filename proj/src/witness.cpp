#include "qarena/witness.hpp"

#include <algorithm>
#include <cmath>

#include "qarena/errors.hpp"

namespace qarena {

MaxCutGraph MaxCutGraph::validated(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 2) throw ParameterError("graph needs at least 2 vertices");
  if (edges.empty()) throw ParameterError("graph needs at least one edge");
  std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ParameterError("edge endpoint out of range");
    }
    if (u == v) throw ParameterError("self-loop");
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end()) {
    throw ParameterError("duplicate edge");
  }
  for (auto [u, v] : normalized) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  MaxCutGraph g;
  g.vertices = vertices;
  g.edges = std::move(normalized);
  g.max_degree = *std::max_element(degree.begin(), degree.end());
  return g;
}

MaxCutGraph random_regular_graph(int vertices, int degree, std::uint64_t seed) {
  if (degree < 1 || degree >= vertices) throw ParameterError("bad degree");
  if ((vertices * degree) % 2 != 0) throw ParameterError("n * degree must be even");
  SplitRng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // Pairing model: shuffle the degree * n half-edge stubs and read pairs.
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(degree));
    for (int v = 0; v < vertices; ++v) {
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    }
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
    }
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return MaxCutGraph::validated(vertices, std::move(edges));
  }
  throw ParameterError("failed to sample a simple regular graph");
}

namespace {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) throw CapacityError("witness width outside [1, 20]");
}

std::size_t table_size(int width) { return std::size_t{1} << width; }

double eval_body(const Witness::Body& body, int width, std::uint32_t x) {
  struct Visitor {
    int width;
    std::uint32_t x;
    double operator()(const DenseTableForm& f) const { return f.values[x]; }
    double operator()(const IndicatorForm& f) const { return f.members[x] ? 1.0 : 0.0; }
    double operator()(const ParityForm& f) const {
      const int s = parity(f.z_mask, x) ? -f.sign : f.sign;
      return s > 0 ? 1.0 : 0.0;
    }
    double operator()(const MaxCutForm& f) const {
      int cut = 0;
      for (auto [u, v] : f.graph.edges) {
        cut += (((x >> u) ^ (x >> v)) & 1u) != 0 ? 1 : 0;
      }
      const double value = static_cast<double>(cut) /
                           (static_cast<double>(f.graph.vertices) *
                            static_cast<double>(f.graph.max_degree));
      return f.complemented ? 1.0 - value : value;
    }
    double operator()(const HeavySetForm& f) const {
      const bool in = f.reference[x] >= f.threshold;
      return (in != f.complemented) ? 1.0 : 0.0;
    }
  };
  return std::visit(Visitor{width, x}, body);
}

bool body_is_binary(const Witness::Body& body, int width) {
  struct Visitor {
    int width;
    bool operator()(const DenseTableForm& f) const {
      for (double v : f.values) {
        if (v != 0.0 && v != 1.0) return false;
      }
      return true;
    }
    bool operator()(const IndicatorForm&) const { return true; }
    bool operator()(const ParityForm&) const { return true; }
    bool operator()(const MaxCutForm&) const { return false; }
    bool operator()(const HeavySetForm&) const { return true; }
  };
  return std::visit(Visitor{width}, body);
}

void validate_body(const Witness::Body& body, int width) {
  struct Visitor {
    int width;
    void operator()(const DenseTableForm& f) const {
      if (f.values.size() != table_size(width)) throw DimensionError("witness table size mismatch");
      for (double v : f.values) {
        if (!(v >= 0.0 && v <= 1.0)) throw ValidityError("witness value outside [0,1]");
      }
    }
    void operator()(const IndicatorForm& f) const {
      if (f.members.size() != table_size(width)) throw DimensionError("indicator size mismatch");
    }
    void operator()(const ParityForm& f) const {
      if (f.z_mask == 0) throw ParameterError("parity mask must be nonzero");
      if (width < 32 && (f.z_mask >> width) != 0) throw DimensionError("parity mask exceeds width");
      if (f.sign != 1 && f.sign != -1) throw ParameterError("parity sign must be +-1");
    }
    void operator()(const MaxCutForm& f) const {
      if (f.graph.vertices != width) throw DimensionError("graph order differs from width");
      MaxCutGraph::validated(f.graph.vertices, f.graph.edges);
    }
    void operator()(const HeavySetForm& f) const {
      if (f.reference.size() != table_size(width)) throw DimensionError("reference size mismatch");
      if (!(f.threshold >= 0.0)) throw ParameterError("threshold must be nonnegative");
    }
  };
  std::visit(Visitor{width}, body);
}

}  // namespace

Witness::Witness(int width, Body body) : width_(width), body_(std::move(body)) {
  check_width(width_);
  validate_body(body_, width_);
  binary_ = body_is_binary(body_, width_);
}

CostClass Witness::cost_class() const {
  if (std::holds_alternative<ParityForm>(body_) || std::holds_alternative<MaxCutForm>(body_)) {
    return CostClass::kPolytime;
  }
  return CostClass::kTableBacked;
}

double Witness::operator()(std::uint32_t x) const { return eval_body(body_, width_, x); }

double Witness::evaluate(const BitString& x) const {
  if (x.width != width_) {
    throw DimensionError("witness width " + std::to_string(width_) + " vs input width " +
                         std::to_string(x.width));
  }
  return (*this)(x.bits);
}

Witness constant_witness(int width, double value) {
  if (!(value >= 0.0 && value <= 1.0)) throw ParameterError("constant outside [0,1]");
  return Witness(width, DenseTableForm{std::vector<double>(table_size(width), value)});
}

Witness indicator_witness(int width, std::vector<bool> members) {
  return Witness(width, IndicatorForm{std::move(members)});
}

Witness parity_witness(int width, std::uint32_t z_mask, int sign) {
  return Witness(width, ParityForm{z_mask, sign});
}

Witness maxcut_witness(const MaxCutGraph& graph) {
  return Witness(graph.vertices, MaxCutForm{graph, false});
}

Witness heavy_set_witness(const DensePmf& reference, double theta) {
  return Witness(reference.width(), HeavySetForm{reference.probs(), theta, false});
}

Witness heavy_set_witness(const DensePmf& reference) {
  return heavy_set_witness(reference, 1.0 / static_cast<double>(reference.size()));
}

Witness complement(const Witness& f) {
  struct Visitor {
    int width;
    Witness operator()(const DenseTableForm& b) const {
      std::vector<double> values(b.values.size());
      for (std::size_t i = 0; i < values.size(); ++i) values[i] = 1.0 - b.values[i];
      return Witness(width, DenseTableForm{std::move(values)});
    }
    Witness operator()(const IndicatorForm& b) const {
      std::vector<bool> members(b.members.size());
      for (std::size_t i = 0; i < members.size(); ++i) members[i] = !b.members[i];
      return Witness(width, IndicatorForm{std::move(members)});
    }
    Witness operator()(const ParityForm& b) const {
      return Witness(width, ParityForm{b.z_mask, -b.sign});
    }
    Witness operator()(const MaxCutForm& b) const {
      return Witness(width, MaxCutForm{b.graph, !b.complemented});
    }
    Witness operator()(const HeavySetForm& b) const {
      return Witness(width, HeavySetForm{b.reference, b.threshold, !b.complemented});
    }
  };
  return std::visit(Visitor{f.width()}, f.body());
}

double exact_mean(const Witness& f, const DensePmf& p) {
  if (f.width() != p.width()) throw DimensionError("witness/pmf width mismatch");
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    sum += p[x] * f(static_cast<std::uint32_t>(x));
  }
  return sum;
}

double exact_gap(const Witness& f, const DensePmf& a, const DensePmf& b) {
  return exact_mean(f, a) - exact_mean(f, b);
}

std::pair<Witness, double> optimal_distinguisher(const DensePmf& a, const DensePmf& b) {
  if (a.width() != b.width()) throw DimensionError("pmf width mismatch");
  std::vector<bool> members(a.size());
  double gap = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] >= b[x]) {
      members[x] = true;
      gap += a[x] - b[x];
    }
  }
  return {indicator_witness(a.width(), std::move(members)), gap};
}

BinarizeResult binarize(const Witness& f, double eps, const DensePmf& nu) {
  if (f.width() != nu.width()) throw DimensionError("witness/pmf width mismatch");
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must be in (0, 1]");

  const std::size_t n = nu.size();
  const double u = 1.0 / static_cast<double>(n);
  const int m = static_cast<int>(std::ceil(1.0 / eps));
  const int levels = 2 * m;

  // Round f up to the grid k/(2m); the level sets of the rounded function are
  // exactly the candidate indicators.
  std::vector<int> level(n);
  for (std::size_t x = 0; x < n; ++x) {
    const double v = f(static_cast<std::uint32_t>(x));
    int k = static_cast<int>(std::ceil(v * levels - 1e-12));
    level[x] = std::clamp(k, 0, levels);
  }

  // gap(k) = sum over {level >= k} of (nu - uniform), accumulated from the top.
  std::vector<double> gap_at(static_cast<std::size_t>(levels) + 2, 0.0);
  std::vector<double> mass_at(static_cast<std::size_t>(levels) + 2, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    mass_at[static_cast<std::size_t>(level[x])] += nu[x] - u;
  }
  double run = 0.0;
  for (int k = levels; k >= 1; --k) {
    run += mass_at[static_cast<std::size_t>(k)];
    gap_at[static_cast<std::size_t>(k)] = run;
  }

  int best_k = 1;
  for (int k = 2; k <= levels; ++k) {
    if (gap_at[static_cast<std::size_t>(k)] > gap_at[static_cast<std::size_t>(best_k)]) best_k = k;
  }
  const double best_gap = gap_at[static_cast<std::size_t>(best_k)];
  const double floor_gap = eps * eps / 8.0;
  if (best_gap < floor_gap) {
    throw ReductionError("no level set separates the pair; claimed gap >= eps does not hold");
  }

  std::vector<bool> members(n);
  for (std::size_t x = 0; x < n; ++x) members[x] = level[x] >= best_k;
  BinarizeResult result{indicator_witness(f.width(), std::move(members)), floor_gap, best_gap,
                        static_cast<double>(best_k) / static_cast<double>(levels)};
  return result;
}

}  // namespace qarena
