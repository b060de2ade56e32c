#pragma once

#include <vector>

#include "qarena/circuit.hpp"
#include "qarena/pmf.hpp"

namespace qarena {

/// Pure state on n qubits; amplitude index bit i is qubit i.
class StateVector {
 public:
  explicit StateVector(int width);  // |0...0>

  int width() const { return width_; }
  const std::vector<Complex>& amps() const { return amps_; }
  Complex amp(std::size_t i) const { return amps_[i]; }

  void apply(const Gate& g);
  double norm_squared() const;

  /// |amp|^2 table as a pmf.
  DensePmf measurement_distribution() const;

 private:
  void apply_matrix1(int q, const std::vector<Complex>& m);
  void apply_matrix2(int a, int b, const std::vector<Complex>& m);

  int width_;
  std::vector<Complex> amps_;
};

/// Exact linear-algebra evaluation of C|0...0>.
StateVector run_statevector(const Circuit& c);

/// Born-rule outcome distribution of measuring C|0...0> in the computational
/// basis.
DensePmf output_distribution(const Circuit& c);

}  // namespace qarena
