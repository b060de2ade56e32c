#include "qarena/density.hpp"

#include <cmath>

#include "qarena/errors.hpp"

namespace qarena {

NoiseSpec NoiseSpec::local_depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("depolarizing rate must be in [0, 1]");
  return NoiseSpec{Kind::kLocalDepolarizing, p};
}

DensityMatrix::DensityMatrix(int width, Eigen::MatrixXcd rho) : width_(width), rho_(std::move(rho)) {}

DensityMatrix DensityMatrix::zero_state(int width) {
  if (width < 1 || width > kMaxDensityWidth) {
    throw CapacityError("density width outside [1, " + std::to_string(kMaxDensityWidth) + "]");
  }
  const Eigen::Index d = Eigen::Index{1} << width;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  rho(0, 0) = 1.0;
  return DensityMatrix(width, std::move(rho));
}

DensityMatrix DensityMatrix::from_matrix(int width, Eigen::MatrixXcd rho) {
  if (width < 1 || width > kMaxDensityWidth) {
    throw CapacityError("density width outside [1, " + std::to_string(kMaxDensityWidth) + "]");
  }
  const Eigen::Index d = Eigen::Index{1} << width;
  if (rho.rows() != d || rho.cols() != d) throw DimensionError("density matrix size mismatch");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidityError("density matrix not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9) {
    throw ValidityError("density matrix trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) throw ValidityError("density matrix not PSD");
  return DensityMatrix(width, std::move(rho));
}

void DensityMatrix::apply_gate(const Gate& g) {
  const auto m = gate_matrix(g);
  if (g.arity() == 1) {
    apply_matrix1(g.targets[0], m);
  } else {
    apply_matrix2(g.targets[0], g.targets[1], m);
  }
}

void DensityMatrix::apply_layer(const std::vector<Gate>& layer) {
  for (const Gate& g : layer) apply_gate(g);
}

void DensityMatrix::apply_matrix1(int q, const std::vector<Complex>& m) {
  const Eigen::Index d = rho_.rows();
  const Eigen::Index mask = Eigen::Index{1} << q;
  // Rows: rho <- U rho.
  for (Eigen::Index r = 0; r < d; ++r) {
    if (r & mask) continue;
    for (Eigen::Index c = 0; c < d; ++c) {
      const Complex a0 = rho_(r, c);
      const Complex a1 = rho_(r | mask, c);
      rho_(r, c) = m[0] * a0 + m[1] * a1;
      rho_(r | mask, c) = m[2] * a0 + m[3] * a1;
    }
  }
  // Columns: rho <- rho U^dagger.
  for (Eigen::Index c = 0; c < d; ++c) {
    if (c & mask) continue;
    for (Eigen::Index r = 0; r < d; ++r) {
      const Complex a0 = rho_(r, c);
      const Complex a1 = rho_(r, c | mask);
      rho_(r, c) = a0 * std::conj(m[0]) + a1 * std::conj(m[1]);
      rho_(r, c | mask) = a0 * std::conj(m[2]) + a1 * std::conj(m[3]);
    }
  }
}

void DensityMatrix::apply_matrix2(int a, int b, const std::vector<Complex>& m) {
  const Eigen::Index d = rho_.rows();
  const Eigen::Index ma = Eigen::Index{1} << a;
  const Eigen::Index mb = Eigen::Index{1} << b;
  auto local = [&](Eigen::Index base, int k) { return base | (k & 2 ? ma : 0) | (k & 1 ? mb : 0); };
  for (Eigen::Index r = 0; r < d; ++r) {
    if ((r & ma) || (r & mb)) continue;
    for (Eigen::Index c = 0; c < d; ++c) {
      Complex in[4];
      for (int k = 0; k < 4; ++k) in[k] = rho_(local(r, k), c);
      for (int i = 0; i < 4; ++i) {
        Complex v{0.0, 0.0};
        for (int k = 0; k < 4; ++k) v += m[static_cast<std::size_t>(4 * i + k)] * in[k];
        rho_(local(r, i), c) = v;
      }
    }
  }
  for (Eigen::Index c = 0; c < d; ++c) {
    if ((c & ma) || (c & mb)) continue;
    for (Eigen::Index r = 0; r < d; ++r) {
      Complex in[4];
      for (int k = 0; k < 4; ++k) in[k] = rho_(r, local(c, k));
      for (int i = 0; i < 4; ++i) {
        Complex v{0.0, 0.0};
        for (int k = 0; k < 4; ++k) v += in[k] * std::conj(m[static_cast<std::size_t>(4 * i + k)]);
        rho_(r, local(c, i)) = v;
      }
    }
  }
}

void DensityMatrix::apply_depolarizing_on(int qubit, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("depolarizing rate must be in [0, 1]");
  const Eigen::Index d = rho_.rows();
  const Eigen::Index mask = Eigen::Index{1} << qubit;
  // (1-p) rho + p * (I/2 tensor tr_qubit rho), written entrywise: diagonal
  // blocks in the qubit index average, off-diagonal blocks just damp.
  for (Eigen::Index r = 0; r < d; ++r) {
    if (r & mask) continue;
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c & mask) continue;
      const Complex e00 = rho_(r, c);
      const Complex e01 = rho_(r, c | mask);
      const Complex e10 = rho_(r | mask, c);
      const Complex e11 = rho_(r | mask, c | mask);
      const Complex avg = 0.5 * (e00 + e11);
      rho_(r, c) = (1.0 - p) * e00 + p * avg;
      rho_(r | mask, c | mask) = (1.0 - p) * e11 + p * avg;
      rho_(r, c | mask) = (1.0 - p) * e01;
      rho_(r | mask, c) = (1.0 - p) * e10;
    }
  }
}

void DensityMatrix::apply_noise(const NoiseSpec& noise) {
  switch (noise.kind) {
    case NoiseSpec::Kind::kLocalDepolarizing:
      for (int q = 0; q < width_; ++q) apply_depolarizing_on(q, noise.rate);
      return;
  }
  throw ParameterError("unknown noise kind");
}

DensePmf DensityMatrix::diagonal_pmf() const {
  std::vector<double> p(static_cast<std::size_t>(rho_.rows()));
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) p[static_cast<std::size_t>(i)] = rho_(i, i).real();
  return DensePmf::from_weights(width_, p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::MatrixXcd& m = rho.matrix();
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidityError("von Neumann entropy of non-Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda > 1e-12) s -= lambda * std::log(lambda);
  }
  return s < 0.0 ? 0.0 : s;
}

DensityMatrix evolve_noisy(const Circuit& c, const NoiseSpec& noise,
                           const std::vector<bool>* noise_layers) {
  if (c.width() > kMaxDensityWidth) {
    throw CapacityError("noisy evolution capped at " + std::to_string(kMaxDensityWidth) + " qubits");
  }
  const std::size_t slots = static_cast<std::size_t>(c.depth()) + 1;
  if (noise_layers != nullptr && noise_layers->size() != slots) {
    throw DimensionError("noise layer mask needs depth + 1 entries");
  }
  const auto noise_on = [&](std::size_t slot) {
    return noise_layers == nullptr || (*noise_layers)[slot];
  };
  DensityMatrix rho = DensityMatrix::zero_state(c.width());
  std::size_t slot = 0;
  for (const auto& layer : c.layers()) {
    if (noise_on(slot++)) rho.apply_noise(noise);
    rho.apply_layer(layer);
  }
  if (noise_on(slot)) rho.apply_noise(noise);
  return rho;
}

DensePmf noisy_output_distribution(const Circuit& c, const NoiseSpec& noise,
                                   const std::vector<bool>* noise_layers) {
  return evolve_noisy(c, noise, noise_layers).diagonal_pmf();
}

}  // namespace qarena
