#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qarena/divergence.hpp"
#include "qarena/ensembles.hpp"
#include "qarena/errors.hpp"
#include "qarena/statevector.hpp"
#include "qarena/stab.hpp"
#include "qarena/xhog.hpp"

using namespace qarena;

TEST_SUITE("xhog") {

TEST_CASE("xeb fidelity endpoints") {
  const DensePmf u = DensePmf::uniform(4);
  CHECK(xeb_fidelity(u, u) == doctest::Approx(0.0).epsilon(1e-12));
  const DensePmf point = DensePmf::point_mass(4, 7);
  CHECK(xeb_fidelity(point, point) == doctest::Approx(15.0));
  CHECK_THROWS_AS(xeb_fidelity(u, DensePmf::uniform(3)), DimensionError);

  SplitRng rng(1);
  const DensePmf a = oracles::random_pmf(6, rng);
  const DensePmf b = oracles::random_pmf(6, rng);
  long double overlap = 0.0L;
  for (std::size_t x = 0; x < a.size(); ++x) {
    overlap += static_cast<long double>(b[x]) * static_cast<long double>(a[x]);
  }
  CHECK(xeb_fidelity(a, b) ==
        doctest::Approx(static_cast<double>(64.0L * overlap - 1.0L)).epsilon(1e-12));
}

TEST_CASE("sample scoring") {
  const DensePmf point = DensePmf::point_mass(4, 3);
  const XhogScore top = score_samples({3, 3, 3}, point, 8.0);
  CHECK(top.distinct_count == 1);
  CHECK(top.mean_prob == doctest::Approx(1.0));
  CHECK(top.passes_b);
  CHECK(top.xeb == doctest::Approx(15.0));

  const DensePmf u = DensePmf::uniform(4);
  std::vector<std::uint32_t> all;
  for (std::uint32_t x = 0; x < 16; ++x) all.push_back(x);
  const XhogScore flat = score_samples(all, u, 1.1);
  CHECK(flat.mean_prob == doctest::Approx(1.0 / 16.0));
  CHECK(!flat.passes_b);
  CHECK(flat.xeb == doctest::Approx(0.0));

  CHECK_THROWS_AS(score_samples({}, u, 1.1), ParameterError);
}

TEST_CASE("sample bound formula") {
  CHECK(xhog_sample_bound(2.0, 1.0) == 1);
  CHECK(xhog_sample_bound(1.1, 1.0) == 100);
  CHECK(xhog_sample_bound(1.01, 1.0) > xhog_sample_bound(1.1, 1.0));
  CHECK_THROWS_AS(xhog_sample_bound(1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(xhog_sample_bound(2.0, 0.5), ParameterError);
}

TEST_CASE("level-set mass identity") {
  // For any binary f with exact gap eps against uniform,
  // nu(L)/|L| >= 1/2^n + eps/|L| >= (1+eps)/2^n.
  SplitRng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6;
    const DensePmf nu = oracles::random_pmf(n, rng);
    const Witness f = heavy_set_witness(nu);
    const double eps = exact_gap(f, nu, DensePmf::uniform(n));
    REQUIRE(eps > 0.0);
    double mass = 0.0;
    double size = 0.0;
    for (std::uint32_t x = 0; x < nu.size(); ++x) {
      if (f(x) == 1.0) {
        mass += nu[x];
        size += 1.0;
      }
    }
    CHECK(mass / size >= 1.0 / 64.0 + eps / size - 1e-12);
    CHECK(mass / size >= (1.0 + eps) / 64.0 - 1e-12);
  }
}

TEST_CASE("spoofer on a clifford z-string witness") {
  // Gap-1/2 witness from a stabilizer circuit: the exact set average
  // nu(L)/|L| is twice the uniform weight, and the spoofer's samples are
  // distinct members of L scored consistently.
  SplitRng seeder(12);
  for (;;) {
    const auto gates = random_clifford(6, seeder.next_u64());
    const auto z = find_z_string(tableau_from_clifford(gates, 6));
    if (!z.has_value()) continue;
    const DensePmf nu = output_distribution(circuit_from_gates(6, gates));
    const Witness f = z_string_witness(6, *z);

    double mass = 0.0;
    double size = 0.0;
    for (std::uint32_t x = 0; x < nu.size(); ++x) {
      if (f(x) == 1.0) {
        mass += nu[x];
        size += 1.0;
      }
    }
    CHECK(mass / size >= 1.5 / 64.0 - 1e-12);

    SplitRng rng(77);
    const SpoofResult result = spoof_xhog(f, nu, 8, rng, 0.5);
    CHECK(result.samples.size() == 8);
    double total = 0.0;
    for (std::uint32_t s : result.samples) {
      CHECK(f(s) == 1.0);
      total += nu[s];
    }
    CHECK(result.score.mean_prob == doctest::Approx(total / 8.0).epsilon(1e-12));
    CHECK(result.score.distinct_count == 8);
    CHECK(result.accepted_draws >= 8);
    break;
  }
}

TEST_CASE("spoofer with trivial witness is uniform sampling") {
  const DensePmf u = DensePmf::uniform(5);
  const Witness all = constant_witness(5, 1.0);
  SplitRng rng(13);
  CHECK_THROWS_AS(spoof_xhog(all, u, 4, rng, 0.1), ParameterError);  // gap is zero

  // The zero-gap edge degenerates to plain uniform sampling: one trial per
  // accept, mean probability exactly uniform.
  const SpoofResult flat = spoof_xhog(all, u, 8, rng, 0.0);
  CHECK(flat.total_trials == flat.accepted_draws);
  CHECK(flat.score.mean_prob == doctest::Approx(1.0 / 32.0).epsilon(1e-12));
  CHECK_FALSE(flat.score.mean_prob >= 1.01 / 32.0);  // fools no b > 1
}

TEST_CASE("claim parameter validation") {
  XhogParams params{1.1, 1.0, 100};
  params.validate();
  params.k = 99;
  CHECK_THROWS_AS(params.validate(), ParameterError);
  CHECK_THROWS_AS((XhogParams{1.0, 1.0, 10}).validate(), ParameterError);
}

TEST_CASE("spoofer infeasible when L is smaller than k") {
  std::vector<bool> tiny(32, false);
  tiny[3] = true;
  tiny[9] = true;
  std::vector<double> probs(32, 0.0);
  probs[3] = 0.5;
  probs[9] = 0.5;
  const DensePmf nu(5, probs);
  SplitRng rng(14);
  CHECK_THROWS_AS(spoof_xhog(indicator_witness(5, tiny), nu, 3, rng, 0.5), ParameterError);
}

TEST_CASE("heavy mass size bound") {
  const DensePmf u = DensePmf::uniform(6);
  std::vector<bool> half(64, false);
  for (std::size_t x = 0; x < 32; ++x) half[x] = true;
  const HeavyMassCheck flat = heavy_mass_size_bound(u, half, 0.1);
  CHECK(flat.mass == doctest::Approx(0.5));
  CHECK(flat.holds);
  CHECK(flat.set_size == 32);
  CHECK(flat.s2_lower_bound == doctest::Approx(0.25 * 64.0));

  // Point mass: c = 2^n makes the bound vacuous.
  std::vector<bool> one(64, false);
  one[5] = true;
  const HeavyMassCheck degenerate = heavy_mass_size_bound(DensePmf::point_mass(6, 5), one, 0.1);
  CHECK(degenerate.holds);
  CHECK(degenerate.s2_lower_bound == doctest::Approx(1.0));

  // Exhaustive level sets of a random-circuit output.
  const DensePmf nu = output_distribution(random_brickwork(8, 16, 404));
  std::vector<double> sorted = nu.probs();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t step = 0; step < sorted.size(); step += 16) {
    const double theta = sorted[step];
    std::vector<bool> level(nu.size());
    for (std::uint32_t x = 0; x < nu.size(); ++x) level[x] = nu[x] >= theta;
    CHECK(heavy_mass_size_bound(nu, level, 0.1).holds);
  }
}

}  // TEST_SUITE
