#pragma once

#include <Eigen/Dense>

#include "qarena/circuit.hpp"
#include "qarena/pmf.hpp"

namespace qarena {

/// Density matrices are capped at 10 qubits (1024 x 1024 complex doubles).
inline constexpr int kMaxDensityWidth = 10;

/// Single noise layer description. Local depolarizing applies
/// rho -> (1-p) rho + p * I/2 independently on every qubit.
struct NoiseSpec {
  enum class Kind { kLocalDepolarizing };
  Kind kind = Kind::kLocalDepolarizing;
  double rate = 0.0;

  static NoiseSpec local_depolarizing(double p);
};

/// Mixed state on n qubits, validated Hermitian / unit-trace / PSD.
class DensityMatrix {
 public:
  static DensityMatrix zero_state(int width);  // |0..0><0..0|
  static DensityMatrix from_matrix(int width, Eigen::MatrixXcd rho);

  int width() const { return width_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  double trace_real() const { return rho_.trace().real(); }

  void apply_gate(const Gate& g);
  void apply_layer(const std::vector<Gate>& layer);

  /// One-qubit depolarizing channel with rate p on the given qubit.
  void apply_depolarizing_on(int qubit, double p);
  /// Depolarizing layer on all qubits.
  void apply_noise(const NoiseSpec& noise);

  /// Diagonal in the computational basis as a pmf.
  DensePmf diagonal_pmf() const;

 private:
  DensityMatrix(int width, Eigen::MatrixXcd rho);
  void apply_matrix1(int q, const std::vector<Complex>& m);
  void apply_matrix2(int a, int b, const std::vector<Complex>& m);

  int width_;
  Eigen::MatrixXcd rho_;
};

/// -sum lambda ln lambda over the spectrum (nats); eigenvalues below 1e-12
/// are treated as exact zeros. Throws ValidityError on non-Hermitian input.
double von_neumann_entropy(const DensityMatrix& rho);

/// Evolves |0..0><0..0| through one noise layer before every unitary layer
/// and one final noise layer before measurement (depth D circuits see D+1
/// noise layers). noise_layers, when given, must have D+1 entries and turns
/// individual noise layers off for experiments.
DensityMatrix evolve_noisy(const Circuit& c, const NoiseSpec& noise,
                           const std::vector<bool>* noise_layers = nullptr);

/// Outcome distribution of the noisy device: the diagonal of evolve_noisy.
DensePmf noisy_output_distribution(const Circuit& c, const NoiseSpec& noise,
                                   const std::vector<bool>* noise_layers = nullptr);

}  // namespace qarena
