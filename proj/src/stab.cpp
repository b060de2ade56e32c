#include "qarena/stab.hpp"

#include <algorithm>

#include "qarena/errors.hpp"
#include "qarena/rng.hpp"

namespace qarena {

namespace {

inline bool bit(std::uint32_t mask, int q) { return (mask >> q) & 1u; }

// Exponent of i contributed by one qubit when multiplying sigma(x1,z1) by
// sigma(x2,z2), following the usual mod-4 phase bookkeeping.
int phase_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return (z2 ? 1 : 0) - (x2 ? 1 : 0);          // Y
  if (x1) return z2 ? (x2 ? 1 : -1) : 0;                     // X
  return x2 ? (z2 ? -1 : 1) : 0;                             // Z
}

}  // namespace

void conjugate_row(PauliRow& row, const Gate& g) {
  const int a = g.targets[0];
  switch (g.kind) {
    case GateKind::kH: {
      if (bit(row.x, a) && bit(row.z, a)) row.sign = -row.sign;
      const bool xa = bit(row.x, a);
      const bool za = bit(row.z, a);
      row.x = (row.x & ~(1u << a)) | (za ? (1u << a) : 0u);
      row.z = (row.z & ~(1u << a)) | (xa ? (1u << a) : 0u);
      return;
    }
    case GateKind::kS: {
      if (bit(row.x, a) && bit(row.z, a)) row.sign = -row.sign;
      if (bit(row.x, a)) row.z ^= (1u << a);
      return;
    }
    case GateKind::kCnot: {
      const int b = g.targets[1];
      const bool xc = bit(row.x, a);
      const bool zc = bit(row.z, a);
      const bool xt = bit(row.x, b);
      const bool zt = bit(row.z, b);
      if (xc && zt && (xt == zc)) row.sign = -row.sign;
      if (xc) row.x ^= (1u << b);
      if (zt) row.z ^= (1u << a);
      return;
    }
    case GateKind::kX:
      if (bit(row.z, a)) row.sign = -row.sign;
      return;
    case GateKind::kZ:
      if (bit(row.x, a)) row.sign = -row.sign;
      return;
    default:
      throw ParameterError("tableau update requires a named Clifford gate");
  }
}

PauliRow multiply_rows(const PauliRow& a, const PauliRow& b) {
  int exponent = (a.sign < 0 ? 2 : 0) + (b.sign < 0 ? 2 : 0);
  std::uint32_t overlap = (a.x | a.z | b.x | b.z);
  for (int q = 0; q < 32; ++q) {
    if (!((overlap >> q) & 1u)) continue;
    exponent += phase_exponent(bit(a.x, q), bit(a.z, q), bit(b.x, q), bit(b.z, q));
  }
  exponent = ((exponent % 4) + 4) % 4;
  if (exponent % 2 != 0) throw ValidityError("product of anticommuting rows requested");
  PauliRow out;
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  out.sign = exponent == 0 ? +1 : -1;
  return out;
}

bool rows_commute(const PauliRow& a, const PauliRow& b) {
  return parity(a.x, b.z) == parity(a.z, b.x);
}

StabTableau::StabTableau(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) throw CapacityError("tableau width outside [1, 20]");
  rows_.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) rows_.push_back(PauliRow{0u, 1u << i, +1});
}

void StabTableau::apply(const Gate& g) {
  if (!is_named_clifford(g.kind)) {
    throw ParameterError("tableau update requires a named Clifford gate");
  }
  for (int i = 0; i < g.arity(); ++i) {
    const int q = g.targets[static_cast<std::size_t>(i)];
    if (q < 0 || q >= width_) throw ParameterError("gate target out of range");
  }
  for (PauliRow& row : rows_) conjugate_row(row, g);
}

bool StabTableau::check_invariants() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (!rows_commute(rows_[i], rows_[j])) return false;
    }
  }
  // Independence: the (x|z) vectors must have full rank over F2.
  std::vector<std::uint64_t> vecs;
  vecs.reserve(rows_.size());
  for (const PauliRow& r : rows_) {
    vecs.push_back((static_cast<std::uint64_t>(r.z) << width_) | r.x);
  }
  int rank = 0;
  for (int col = 2 * width_ - 1; col >= 0; --col) {
    const std::uint64_t mask = std::uint64_t{1} << col;
    std::size_t pivot = vecs.size();
    for (std::size_t i = static_cast<std::size_t>(rank); i < vecs.size(); ++i) {
      if (vecs[i] & mask) {
        pivot = i;
        break;
      }
    }
    if (pivot == vecs.size()) continue;
    std::swap(vecs[static_cast<std::size_t>(rank)], vecs[pivot]);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i != static_cast<std::size_t>(rank) && (vecs[i] & mask)) {
        vecs[i] ^= vecs[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank == width_;
}

StabTableau tableau_from_clifford(const std::vector<Gate>& gates, int width) {
  StabTableau t(width);
  for (const Gate& g : gates) t.apply(g);
  return t;
}

namespace {

struct SweepContext {
  std::vector<Gate>* gates;
  PauliRow* p;
  PauliRow* q;

  void emit(Gate g) {
    conjugate_row(*p, g);
    conjugate_row(*q, g);
    gates->push_back(std::move(g));
  }
};

// Turns the row into +-X_pivot using S/H to remove Z components, CNOTs to
// fold the X support together and a final swap onto the pivot. Which row is
// being cleared is *row; the companion row rides along.
void clear_to_x(SweepContext& ctx, PauliRow* row, int pivot, int n, bool pin_companion_z) {
  for (int qb = pivot; qb < n; ++qb) {
    if (bit(row->z, qb)) {
      if (bit(row->x, qb)) {
        ctx.emit(Gate::s(qb));
      } else {
        ctx.emit(Gate::h(qb));
      }
    }
  }
  std::vector<int> support;
  for (int qb = pivot; qb < n; ++qb) {
    if (bit(row->x, qb)) support.push_back(qb);
  }
  if (support.empty()) throw ValidityError("sweep row lost its support");
  int head = support.front();
  if (pin_companion_z && bit(row->x, pivot)) head = pivot;
  for (int qb : support) {
    if (qb != head) ctx.emit(Gate::cnot(head, qb));
  }
  if (head != pivot) {
    ctx.emit(Gate::cnot(pivot, head));
    ctx.emit(Gate::cnot(head, pivot));
    ctx.emit(Gate::cnot(pivot, head));
  }
}

void sweep_block(SweepContext& ctx, int pivot, int n) {
  PauliRow& p = *ctx.p;
  PauliRow& q = *ctx.q;

  clear_to_x(ctx, ctx.p, pivot, n, /*pin_companion_z=*/false);
  // q anticommutes with X_pivot, so its z bit at the pivot is set.
  const bool q_is_z_pivot = (q.x == 0u) && (q.z == (1u << pivot));
  if (!q_is_z_pivot) {
    ctx.emit(Gate::h(pivot));
    // q now has x bit set at the pivot; clearing it keeps Z_pivot (= p)
    // intact because only S(pivot) and pivot-controlled CNOTs can touch it.
    clear_to_x(ctx, ctx.q, pivot, n, /*pin_companion_z=*/true);
    ctx.emit(Gate::h(pivot));
  }
  if (p.sign < 0) ctx.emit(Gate::z(pivot));
  if (q.sign < 0) ctx.emit(Gate::x(pivot));
}

std::vector<Gate> random_clifford_sweep(int n, SplitRng& rng) {
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) {
    const int m = n - i;
    const std::uint64_t space = std::uint64_t{1} << (2 * m);
    const std::uint64_t v = rng.next_below(space - 1) + 1;
    const std::uint32_t mask = (m == 32) ? ~0u : ((1u << m) - 1u);
    PauliRow p;
    p.x = (static_cast<std::uint32_t>(v) & mask) << i;
    p.z = (static_cast<std::uint32_t>(v >> m) & mask) << i;
    p.sign = rng.next_bool() ? -1 : +1;
    PauliRow q;
    for (;;) {
      const std::uint64_t w = rng.next_below(space);
      q.x = (static_cast<std::uint32_t>(w) & mask) << i;
      q.z = (static_cast<std::uint32_t>(w >> m) & mask) << i;
      if (!rows_commute(p, q)) break;
    }
    q.sign = rng.next_bool() ? -1 : +1;

    SweepContext ctx{&gates, &p, &q};
    sweep_block(ctx, i, n);
    if (p != PauliRow{1u << i, 0u, +1} || q != PauliRow{0u, 1u << i, +1}) {
      throw ValidityError("sweep failed to normalize the sampled pair");
    }
  }
  return gates;
}

std::vector<Gate> random_clifford_walk(int n, SplitRng& rng) {
  const int steps = 16 + 24 * n * n;
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    const std::uint64_t kind = n >= 2 ? rng.next_below(3) : rng.next_below(2);
    const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (kind == 0) {
      gates.push_back(Gate::h(a));
    } else if (kind == 1) {
      gates.push_back(Gate::s(a));
    } else {
      int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
      if (b >= a) ++b;
      gates.push_back(Gate::cnot(a, b));
    }
  }
  return gates;
}

}  // namespace

std::vector<Gate> random_clifford(int n, std::uint64_t seed, CliffordSampling method) {
  if (n < 1 || n > kMaxWidth) throw CapacityError("clifford width outside [1, 20]");
  SplitRng rng = SplitRng(seed).derive(0x636c6966ULL);
  switch (method) {
    case CliffordSampling::kUniformSweep:
      return random_clifford_sweep(n, rng);
    case CliffordSampling::kRandomWalk:
      return random_clifford_walk(n, rng);
  }
  throw ParameterError("unknown sampling method");
}

std::optional<PauliZString> find_z_string(const StabTableau& t) {
  const int n = t.width();
  const auto& rows = t.rows();

  // Row-reduce the X block, tagging each working row with the generator
  // combination it stands for. Rows whose X part vanishes span the kernel.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;  // (x_part, combo)
  work.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) work.emplace_back(rows[static_cast<std::size_t>(i)].x, 1u << i);

  std::size_t done = 0;
  for (int col = 0; col < n && done < work.size(); ++col) {
    const std::uint32_t mask = 1u << col;
    std::size_t pivot = work.size();
    for (std::size_t i = done; i < work.size(); ++i) {
      if (work[i].first & mask) {
        pivot = i;
        break;
      }
    }
    if (pivot == work.size()) continue;
    std::swap(work[done], work[pivot]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != done && (work[i].first & mask)) {
        work[i].first ^= work[done].first;
        work[i].second ^= work[done].second;
      }
    }
    ++done;
  }

  // Materialize each kernel combination as an actual group element.
  std::vector<PauliRow> z_elements;
  for (const auto& [x_part, combo] : work) {
    if (x_part != 0u || combo == 0u) continue;
    PauliRow acc{0u, 0u, +1};
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (!((combo >> i) & 1u)) continue;
      acc = first ? rows[static_cast<std::size_t>(i)]
                  : multiply_rows(acc, rows[static_cast<std::size_t>(i)]);
      first = false;
    }
    if (acc.x != 0u) throw ValidityError("kernel combination kept an X part");
    z_elements.push_back(acc);
  }
  if (z_elements.empty()) return std::nullopt;

  // Reduced echelon basis over the z masks, indexed by pivot bit; signs
  // multiply along. After full reduction no row contains another row's
  // pivot, so the smallest basis mask is the smallest nonzero element of
  // the whole span.
  std::vector<std::optional<PauliRow>> slot(static_cast<std::size_t>(n));
  for (PauliRow v : z_elements) {
    while (v.z != 0u) {
      const int top = 31 - __builtin_clz(v.z);
      auto& s = slot[static_cast<std::size_t>(top)];
      if (!s) {
        s = v;
        break;
      }
      v = multiply_rows(v, *s);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    if (!slot[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < n; ++j) {
      auto& other = slot[static_cast<std::size_t>(j)];
      if (j == i || !other) continue;
      if ((other->z >> i) & 1u) *other = multiply_rows(*other, *slot[static_cast<std::size_t>(i)]);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (slot[static_cast<std::size_t>(i)]) {
      return PauliZString{slot[static_cast<std::size_t>(i)]->z, slot[static_cast<std::size_t>(i)]->sign};
    }
  }
  return std::nullopt;
}

Witness z_string_witness(int width, const PauliZString& p) {
  if (p.z_mask == 0) throw ParameterError("z string must be nonzero");
  return parity_witness(width, p.z_mask, p.sign);
}

}  // namespace qarena
