#include "qarena/circuit.hpp"

#include <cmath>
#include <string>

#include "qarena/errors.hpp"
#include "qarena/pmf.hpp"

namespace qarena {

namespace {
const Complex kI{0.0, 1.0};
const double kInvSqrt2 = 0.7071067811865475244;
}  // namespace

bool is_named_clifford(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kS:
    case GateKind::kCnot:
    case GateKind::kX:
    case GateKind::kZ:
      return true;
    default:
      return false;
  }
}

Gate Gate::unitary1(int q, std::vector<Complex> m) {
  Gate g;
  g.kind = GateKind::kUnitary1;
  g.targets = {q, -1};
  g.matrix = std::move(m);
  return g;
}

Gate Gate::unitary2(int a, int b, std::vector<Complex> m) {
  Gate g;
  g.kind = GateKind::kUnitary2;
  g.targets = {a, b};
  g.matrix = std::move(m);
  return g;
}

Gate Gate::h(int q) { return Gate{GateKind::kH, {q, -1}, {}}; }
Gate Gate::s(int q) { return Gate{GateKind::kS, {q, -1}, {}}; }
Gate Gate::cnot(int control, int target) { return Gate{GateKind::kCnot, {control, target}, {}}; }
Gate Gate::x(int q) { return Gate{GateKind::kX, {q, -1}, {}}; }
Gate Gate::z(int q) { return Gate{GateKind::kZ, {q, -1}, {}}; }

std::vector<Complex> gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::kUnitary1:
    case GateKind::kUnitary2:
      return g.matrix;
    case GateKind::kH:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::kS:
      return {1.0, 0.0, 0.0, kI};
    case GateKind::kX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kZ:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::kCnot:
      return {1, 0, 0, 0,  //
              0, 1, 0, 0,  //
              0, 0, 0, 1,  //
              0, 0, 1, 0};
  }
  throw ParameterError("unknown gate kind");
}

bool is_unitary(const std::vector<Complex>& m, int dim, double tol) {
  if (m.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) return false;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      Complex dot = 0.0;
      for (int k = 0; k < dim; ++k) {
        dot += m[static_cast<std::size_t>(r * dim + k)] *
               std::conj(m[static_cast<std::size_t>(c * dim + k)]);
      }
      const Complex expect = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(dot - expect) > tol) return false;
    }
  }
  return true;
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) throw CapacityError("circuit width outside [1, 20]");
}

void Circuit::add_layer(std::vector<Gate> gates) {
  std::uint32_t used = 0;
  for (const Gate& g : gates) {
    const int arity = g.arity();
    for (int i = 0; i < arity; ++i) {
      const int q = g.targets[static_cast<std::size_t>(i)];
      if (q < 0 || q >= width_) throw ParameterError("gate target out of range");
      const std::uint32_t bit = 1u << q;
      if (used & bit) throw ParameterError("overlapping targets within a layer");
      used |= bit;
    }
    if (arity == 2 && g.targets[0] == g.targets[1]) {
      throw ParameterError("two-qubit gate with equal targets");
    }
    if (g.kind == GateKind::kUnitary1 && !is_unitary(g.matrix, 2)) {
      throw ValidityError("one-qubit matrix not unitary");
    }
    if (g.kind == GateKind::kUnitary2 && !is_unitary(g.matrix, 4)) {
      throw ValidityError("two-qubit matrix not unitary");
    }
  }
  layers_.push_back(std::move(gates));
}

void Circuit::append(Gate g) {
  std::vector<Gate> layer;
  layer.push_back(std::move(g));
  add_layer(std::move(layer));
}

Circuit circuit_from_gates(int width, const std::vector<Gate>& gates) {
  Circuit c(width);
  for (const Gate& g : gates) c.append(g);
  return c;
}

}  // namespace qarena
