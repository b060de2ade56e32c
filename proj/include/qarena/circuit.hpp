#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qarena {

using Complex = std::complex<double>;

enum class GateKind { kUnitary1, kUnitary2, kH, kS, kCnot, kX, kZ };

bool is_named_clifford(GateKind kind);

/// One gate. Matrix entries are row-major; for two-qubit gates the local
/// basis index is (bit of targets[0] << 1) | bit of targets[1], so
/// targets[0] is the control slot of kCnot.
struct Gate {
  GateKind kind = GateKind::kH;
  std::array<int, 2> targets{0, -1};
  std::vector<Complex> matrix;  // 4 entries (1q), 16 entries (2q), empty for named kinds

  static Gate unitary1(int q, std::vector<Complex> m);
  static Gate unitary2(int a, int b, std::vector<Complex> m);
  static Gate h(int q);
  static Gate s(int q);
  static Gate cnot(int control, int target);
  static Gate x(int q);
  static Gate z(int q);

  int arity() const { return targets[1] < 0 ? 1 : 2; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Dense row-major matrix of the gate (2x2 or 4x4), resolving named kinds.
std::vector<Complex> gate_matrix(const Gate& g);

/// ||U U^dagger - I||_max <= tol for a dim x dim row-major matrix.
bool is_unitary(const std::vector<Complex>& m, int dim, double tol = 1e-10);

/// Layered circuit on n qubits. Within a layer targets are disjoint; every
/// explicit matrix must be unitary to 1e-10.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  const std::vector<std::vector<Gate>>& layers() const { return layers_; }

  void add_layer(std::vector<Gate> gates);
  /// Appends the gate as a layer of its own.
  void append(Gate g);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  std::vector<std::vector<Gate>> layers_;
};

/// Wraps a flat gate sequence, one gate per layer.
Circuit circuit_from_gates(int width, const std::vector<Gate>& gates);

}  // namespace qarena
