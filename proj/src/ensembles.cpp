#include "qarena/ensembles.hpp"

#include <cmath>

#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"
#include "qarena/parallel.hpp"
#include "qarena/statevector.hpp"

namespace qarena {

std::vector<Complex> random_haar_unitary(int dim, SplitRng& rng) {
  if (dim < 2) throw ParameterError("dim must be >= 2");
  const std::size_t d = static_cast<std::size_t>(dim);
  // Ginibre matrix, columns then orthonormalized in place.
  std::vector<Complex> m(d * d);
  for (auto& z : m) z = Complex{rng.next_gaussian(), rng.next_gaussian()};

  auto col = [&](std::size_t c, std::size_t r) -> Complex& { return m[r * d + c]; };
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex dot{0.0, 0.0};
      for (std::size_t r = 0; r < d; ++r) dot += std::conj(col(prev, r)) * col(c, r);
      for (std::size_t r = 0; r < d; ++r) col(c, r) -= dot * col(prev, r);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < d; ++r) norm += std::norm(col(c, r));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < d; ++r) col(c, r) /= norm;
  }
  return m;
}

Circuit random_brickwork(int n, int depth, std::uint64_t seed) {
  if (n < 2) throw ParameterError("brickwork needs n >= 2");
  if (depth < 0) throw ParameterError("depth must be >= 0");
  Circuit c(n);
  SplitRng rng = SplitRng(seed).derive(0x627269636bULL);
  for (int layer = 0; layer < depth; ++layer) {
    const int start = layer % 2;
    std::vector<Gate> gates;
    for (int a = start; a + 1 < n; a += 2) {
      gates.push_back(Gate::unitary2(a, a + 1, random_haar_unitary(4, rng)));
    }
    if (gates.empty()) continue;  // n = 2 odd layers have no pair
    c.add_layer(std::move(gates));
  }
  return c;
}

HaarMomentReport haar_moment_diagnostic(int n, int depth, int ensemble_size, std::uint64_t seed) {
  if (n > 12) throw CapacityError("diagnostic capped at n <= 12");
  if (ensemble_size < 1) throw ParameterError("ensemble_size must be >= 1");

  std::vector<double> p0(static_cast<std::size_t>(ensemble_size));
  std::vector<double> coll(static_cast<std::size_t>(ensemble_size));
  const SplitRng root(seed);
  parallel_for(ensemble_size, [&](std::int64_t i) {
    SplitRng stream = root.derive(static_cast<std::uint64_t>(i));
    const std::uint64_t circuit_seed = stream.next_u64();
    const DensePmf nu = output_distribution(random_brickwork(n, depth, circuit_seed));
    p0[static_cast<std::size_t>(i)] = nu[0];
    coll[static_cast<std::size_t>(i)] = collision_probability(nu);
  });

  HaarMomentReport rep;
  rep.width = n;
  rep.depth = depth;
  rep.ensemble_size = ensemble_size;
  for (int i = 0; i < ensemble_size; ++i) {
    rep.mean_p += p0[static_cast<std::size_t>(i)];
    rep.mean_collision += coll[static_cast<std::size_t>(i)];
  }
  rep.mean_p /= ensemble_size;
  rep.mean_collision /= ensemble_size;
  if (ensemble_size > 1) {
    double var = 0.0;
    for (int i = 0; i < ensemble_size; ++i) {
      const double d = coll[static_cast<std::size_t>(i)] - rep.mean_collision;
      var += d * d;
    }
    var /= (ensemble_size - 1);
    rep.stderr_collision = std::sqrt(var / ensemble_size);
  }
  return rep;
}

}  // namespace qarena
