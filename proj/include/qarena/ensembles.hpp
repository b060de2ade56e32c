#pragma once

#include <cstdint>

#include "qarena/circuit.hpp"
#include "qarena/rng.hpp"

namespace qarena {

/// Haar-distributed dim x dim unitary: QR of a complex Gaussian matrix via
/// modified Gram-Schmidt. The triangular factor's diagonal comes out real
/// positive, which is exactly the phase convention under which Q carries the
/// Haar measure.
std::vector<Complex> random_haar_unitary(int dim, SplitRng& rng);

/// Brickwork circuit: alternating even/odd layers of independent Haar
/// two-qubit gates on neighboring pairs. depth counts layers; depth 0 is the
/// identity circuit. Deterministic in the seed.
Circuit random_brickwork(int n, int depth, std::uint64_t seed);

/// Ensemble second-moment diagnostic: averages of nu(0^n) and of the
/// collision probability sum_x nu(x)^2 over sampled brickwork circuits.
/// Deep ensembles should approach mean_collision = 2/(2^n + 1) from above.
struct HaarMomentReport {
  int width = 0;
  int depth = 0;
  int ensemble_size = 0;
  double mean_p = 0.0;
  double mean_collision = 0.0;
  double stderr_collision = 0.0;
};

HaarMomentReport haar_moment_diagnostic(int n, int depth, int ensemble_size, std::uint64_t seed);

}  // namespace qarena
