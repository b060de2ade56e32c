#include "qarena/statevector.hpp"

#include <cmath>

#include "qarena/errors.hpp"

namespace qarena {

StateVector::StateVector(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) throw CapacityError("statevector width outside [1, 20]");
  amps_.assign(std::size_t{1} << width, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::kX: {
      const std::size_t mask = std::size_t{1} << g.targets[0];
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) std::swap(amps_[i], amps_[i | mask]);
      }
      return;
    }
    case GateKind::kZ: {
      const std::size_t mask = std::size_t{1} << g.targets[0];
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) amps_[i] = -amps_[i];
      }
      return;
    }
    case GateKind::kS: {
      const std::size_t mask = std::size_t{1} << g.targets[0];
      const Complex phase{0.0, 1.0};
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) amps_[i] *= phase;
      }
      return;
    }
    case GateKind::kCnot: {
      const std::size_t cm = std::size_t{1} << g.targets[0];
      const std::size_t tm = std::size_t{1} << g.targets[1];
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cm) && (i & tm) == 0) std::swap(amps_[i], amps_[i | tm]);
      }
      return;
    }
    case GateKind::kH:
      apply_matrix1(g.targets[0], gate_matrix(g));
      return;
    case GateKind::kUnitary1:
      apply_matrix1(g.targets[0], g.matrix);
      return;
    case GateKind::kUnitary2:
      apply_matrix2(g.targets[0], g.targets[1], g.matrix);
      return;
  }
  throw ParameterError("unknown gate kind");
}

void StateVector::apply_matrix1(int q, const std::vector<Complex>& m) {
  const std::size_t mask = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | mask];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_matrix2(int a, int b, const std::vector<Complex>& m) {
  const std::size_t ma = std::size_t{1} << a;
  const std::size_t mb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ma) || (i & mb)) continue;
    // Local basis: (bit a << 1) | bit b.
    const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex v{0.0, 0.0};
      for (int c = 0; c < 4; ++c) v += m[static_cast<std::size_t>(4 * r + c)] * in[c];
      amps_[idx[r]] = v;
    }
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

DensePmf StateVector::measurement_distribution() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return DensePmf::from_weights(width_, p);
}

StateVector run_statevector(const Circuit& c) {
  StateVector psi(c.width());
  for (const auto& layer : c.layers()) {
    for (const Gate& g : layer) psi.apply(g);
  }
  return psi;
}

DensePmf output_distribution(const Circuit& c) {
  return run_statevector(c).measurement_distribution();
}

}  // namespace qarena
