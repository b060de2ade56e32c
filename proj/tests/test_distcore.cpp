#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"
#include "qarena/pmf.hpp"
#include "qarena/witness.hpp"

using namespace qarena;

TEST_SUITE("distcore") {

TEST_CASE("bitstring basics") {
  BitString b(1, 3);
  CHECK(b.to_string() == "100");
  CHECK(b.bit(0));
  CHECK(!b.bit(1));
  CHECK_THROWS_AS(BitString(8, 3), ParameterError);
  CHECK_THROWS_AS(BitString(0, 0), CapacityError);
  CHECK_THROWS_AS(BitString(0, 21), CapacityError);
}

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(DensePmf(2, {0.5, 0.5, 0.5, 0.5}), ValidityError);
  CHECK_THROWS_AS(DensePmf(2, {1.0, 0.0, 0.0}), DimensionError);
  CHECK_THROWS_AS(DensePmf(2, {1.5, -0.5, 0.0, 0.0}), ValidityError);
  CHECK_THROWS_AS(DensePmf::uniform(21), CapacityError);
  const DensePmf u = DensePmf::uniform(3);
  CHECK(u[5] == doctest::Approx(0.125));
}

TEST_CASE("empirical pmf") {
  const DensePmf p = empirical_pmf(2, {0, 0, 1, 3});
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.25));
  CHECK(p[2] == doctest::Approx(0.0));
  CHECK_THROWS_AS(empirical_pmf(2, {}), ParameterError);
  CHECK_THROWS_AS(empirical_pmf(2, {4}), ParameterError);
}

TEST_CASE("tv identities") {
  const DensePmf u2 = DensePmf::uniform(2);
  CHECK(tv_distance(u2, u2) == doctest::Approx(0.0));
  CHECK(tv_distance(DensePmf::point_mass(2, 0), u2) == doctest::Approx(0.75));
  CHECK_THROWS_AS(tv_distance(u2, DensePmf::uniform(3)), DimensionError);
}

TEST_CASE("relative entropy") {
  const DensePmf u3 = DensePmf::uniform(3);
  CHECK(relative_entropy(u3, u3) == doctest::Approx(0.0));
  CHECK(relative_entropy(DensePmf::point_mass(3, 5), u3) == doctest::Approx(3.0 * std::log(2.0)));
  // Support violation yields the +infinity sentinel, not an error.
  CHECK(std::isinf(relative_entropy(u3, DensePmf::point_mass(3, 0))));

  SplitRng rng(11);
  const DensePmf a = oracles::random_pmf(5, rng);
  const DensePmf b = oracles::random_pmf(5, rng);
  CHECK(relative_entropy(a, b) == doctest::Approx(oracles::kl_reference(a.probs(), b.probs()))
                                      .epsilon(1e-12));
}

TEST_CASE("entropies") {
  const int n = 4;
  const DensePmf u = DensePmf::uniform(n);
  CHECK(shannon_entropy(u) == doctest::Approx(n * std::log(2.0)));
  CHECK(renyi2_entropy(u) == doctest::Approx(n * std::log(2.0)));
  const DensePmf point = DensePmf::point_mass(n, 3);
  CHECK(shannon_entropy(point) == doctest::Approx(0.0));
  CHECK(renyi2_entropy(point) == doctest::Approx(0.0));

  const DensePmf p(2, {0.5, 0.25, 0.25, 0.0});
  CHECK(shannon_entropy(p) == doctest::Approx(1.5 * std::log(2.0)));
  CHECK(renyi2_entropy(p) == doctest::Approx(-std::log(0.375)));
}

TEST_CASE("entropy identities on random pmfs") {
  SplitRng rng(23);
  for (int n = 2; n <= 8; n += 2) {
    const DensePmf a = oracles::random_pmf(n, rng);
    const double n_ln2 = n * std::log(2.0);
    // D(a || uniform) + S(a) = n ln 2.
    CHECK(relative_entropy(a, DensePmf::uniform(n)) + shannon_entropy(a) ==
          doctest::Approx(n_ln2).epsilon(1e-9));
    CHECK(renyi2_entropy(a) <= shannon_entropy(a) + 1e-9);
    CHECK(shannon_entropy(a) <= n_ln2 + 1e-9);
  }
}

TEST_CASE("optimal distinguisher") {
  const DensePmf u3 = DensePmf::uniform(3);
  auto [w_same, gap_same] = optimal_distinguisher(u3, u3);
  CHECK(gap_same == doctest::Approx(0.0));

  auto [w, gap] = optimal_distinguisher(u3, DensePmf::point_mass(3, 0));
  CHECK(gap == doctest::Approx(0.875));
  CHECK(w(0) == 0.0);
  CHECK(w(1) == 1.0);
  CHECK(w(7) == 1.0);
}

TEST_CASE("dual equals primal tv on random pairs") {
  SplitRng rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(9));  // 2..10
    const DensePmf a = oracles::random_pmf(n, rng);
    const DensePmf b = oracles::random_pmf(n, rng);
    auto [w, gap] = optimal_distinguisher(a, b);
    CHECK(gap == doctest::Approx(tv_distance(a, b)).epsilon(1e-9));
    CHECK(exact_gap(w, a, b) == doctest::Approx(gap).epsilon(1e-12));
  }
}

TEST_CASE("pinsker on random pairs") {
  SplitRng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const DensePmf a = oracles::random_pmf(n, rng);
    const DensePmf b = oracles::random_pmf(n, rng);
    const DivergenceReport rep = divergence_report(a, b);
    CHECK(rep.tv <= std::sqrt(rep.kl_nats / 2.0) + 1e-9);
    CHECK(rep.renyi2_nats <= rep.shannon_nats + 1e-9);
  }
}

TEST_CASE("hoeffding sample counts") {
  CHECK(hoeffding_samples(1.0, 0.5) == 3);
  CHECK(hoeffding_samples(0.1, 0.01) == 1060);
  // Halving eps quadruples the count (up to ceiling).
  const auto s1 = hoeffding_samples(0.2, 0.05);
  const auto s2 = hoeffding_samples(0.1, 0.05);
  CHECK(s2 >= 4 * s1 - 4);
  CHECK(s2 <= 4 * s1 + 4);
  CHECK_THROWS_AS(hoeffding_samples(0.0, 0.1), ParameterError);
  CHECK_THROWS_AS(hoeffding_samples(0.5, 1.0), ParameterError);
}

TEST_CASE("tv against dual formulation at n=6") {
  SplitRng rng(53);
  const DensePmf a = oracles::random_pmf(6, rng);
  const DensePmf b = oracles::random_pmf(6, rng);
  // Independent evaluation of both formulations straight from the tables.
  double sum_formula = 0.0;
  double dual_at_indicator = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    sum_formula += std::abs(a[x] - b[x]);
    if (a[x] >= b[x]) dual_at_indicator += a[x] - b[x];
  }
  sum_formula *= 0.5;
  CHECK(tv_distance(a, b) == doctest::Approx(sum_formula).epsilon(1e-12));
  CHECK(tv_distance(a, b) == doctest::Approx(dual_at_indicator).epsilon(1e-12));
}

}  // TEST_SUITE
