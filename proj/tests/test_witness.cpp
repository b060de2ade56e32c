#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"
#include "qarena/witness.hpp"

using namespace qarena;

TEST_SUITE("witness") {

TEST_CASE("constant and indicator forms") {
  const Witness one = constant_witness(3, 1.0);
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(one(x) == 1.0);

  std::vector<bool> members(8, false);
  members[0] = true;
  const Witness ind = indicator_witness(3, members);
  CHECK(ind(0) == 1.0);
  CHECK(ind(5) == 0.0);
  CHECK(ind.is_binary());
  CHECK(ind.cost_class() == CostClass::kTableBacked);
  CHECK_THROWS_AS(ind.evaluate(BitString(0, 4)), DimensionError);
}

TEST_CASE("maxcut witness values") {
  const MaxCutGraph edge = MaxCutGraph::validated(2, {{0, 1}});
  const Witness f_edge = maxcut_witness(edge);
  CHECK(f_edge.cost_class() == CostClass::kPolytime);
  CHECK(f_edge(0b01) == doctest::Approx(0.5));
  CHECK(f_edge(0b00) == doctest::Approx(0.0));

  const MaxCutGraph triangle = MaxCutGraph::validated(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(triangle.max_degree == 2);
  const Witness f_tri = maxcut_witness(triangle);
  // String with qubit 0 = 0 and qubits 1, 2 = 1 cuts two of three edges.
  CHECK(f_tri(0b110) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(MaxCutGraph::validated(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(MaxCutGraph::validated(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(MaxCutGraph::validated(3, {{0, 3}}), ParameterError);
}

TEST_CASE("maxcut max equals brute force on a random cubic graph") {
  const MaxCutGraph g = random_regular_graph(10, 3, 91);
  const Witness f = maxcut_witness(g);
  int best_cut = 0;
  for (std::uint32_t x = 0; x < (1u << 10); ++x) {
    int cut = 0;
    for (auto [u, v] : g.edges) cut += (((x >> u) ^ (x >> v)) & 1u) ? 1 : 0;
    best_cut = std::max(best_cut, cut);
  }
  double best_f = 0.0;
  for (std::uint32_t x = 0; x < (1u << 10); ++x) best_f = std::max(best_f, f(x));
  CHECK(best_f == doctest::Approx(best_cut / (10.0 * 3.0)).epsilon(1e-12));
  CHECK(best_f <= 1.0);
}

TEST_CASE("witness range is [0,1] exhaustively") {
  SplitRng rng(7);
  const DensePmf ref = oracles::random_pmf(6, rng);
  const std::vector<Witness> ws = {
      maxcut_witness(random_regular_graph(6, 3, 5)),
      heavy_set_witness(ref),
      parity_witness(6, 0b101, -1),
      complement(maxcut_witness(random_regular_graph(6, 3, 6))),
  };
  for (const Witness& w : ws) {
    for (std::uint32_t x = 0; x < (1u << 6); ++x) {
      const double v = w(x);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("heavy set witness") {
  const DensePmf u = DensePmf::uniform(4);
  const Witness all = heavy_set_witness(u);  // threshold 2^-n: everything is at threshold
  for (std::uint32_t x = 0; x < 16; ++x) CHECK(all(x) == 1.0);

  const Witness single = heavy_set_witness(DensePmf::point_mass(4, 9), 0.5);
  CHECK(single(9) == 1.0);
  CHECK(single(8) == 0.0);

  SplitRng rng(19);
  const DensePmf nu = oracles::random_pmf(8, rng);
  const Witness f = heavy_set_witness(nu);
  // Gap against uniform matched to an exhaustive sum.
  double expect_nu = 0.0;
  double expect_u = 0.0;
  for (std::uint32_t x = 0; x < nu.size(); ++x) {
    if (nu[x] >= 1.0 / 256.0) {
      expect_nu += nu[x];
      expect_u += 1.0 / 256.0;
    }
  }
  CHECK(exact_mean(f, nu) == doctest::Approx(expect_nu).epsilon(1e-12));
  CHECK(exact_gap(f, nu, DensePmf::uniform(8)) ==
        doctest::Approx(expect_nu - expect_u).epsilon(1e-12));
  CHECK(exact_gap(f, nu, DensePmf::uniform(8)) > 0.0);
}

TEST_CASE("complement inverts every form") {
  SplitRng rng(29);
  const DensePmf ref = oracles::random_pmf(5, rng);
  const std::vector<Witness> ws = {
      heavy_set_witness(ref),
      parity_witness(5, 0b10011, +1),
      maxcut_witness(random_regular_graph(5, 2, 3)),
      constant_witness(5, 0.25),
  };
  for (const Witness& w : ws) {
    const Witness c = complement(w);
    for (std::uint32_t x = 0; x < 32; ++x) {
      CHECK(c(x) == doctest::Approx(1.0 - w(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("binarize keeps binary witnesses") {
  SplitRng rng(31);
  const DensePmf nu = oracles::random_pmf(6, rng);
  auto [f, gap] = optimal_distinguisher(nu, DensePmf::uniform(6));
  REQUIRE(gap > 0.05);
  const auto result = binarize(f, gap, nu);
  for (std::uint32_t x = 0; x < 64; ++x) CHECK(result.binary(x) == f(x));
  CHECK(result.achieved_gap == doctest::Approx(gap).epsilon(1e-9));
}

TEST_CASE("binarize rejects constants") {
  const DensePmf nu = DensePmf::uniform(4);
  CHECK_THROWS_AS(binarize(constant_witness(4, 0.7), 0.25, nu), ReductionError);
}

TEST_CASE("binarize beats the guaranteed gap on rank witnesses") {
  SplitRng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const DensePmf nu = oracles::random_pmf(6, rng);
    // Probability rank scaled to [0,1]: heavy strings score high.
    std::vector<std::size_t> order(nu.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return nu[a] < nu[b]; });
    std::vector<double> values(nu.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      values[order[r]] = static_cast<double>(r) / static_cast<double>(order.size() - 1);
    }
    const Witness f(6, DenseTableForm{values});
    const double eps = exact_gap(f, nu, DensePmf::uniform(6));
    if (eps < 0.05) continue;
    const auto result = binarize(f, eps, nu);
    CHECK(result.binary.is_binary());
    CHECK(result.achieved_gap >= eps * eps / 8.0);
    // Independent exhaustive rescan over thresholds confirms optimality.
    const int m = static_cast<int>(std::ceil(1.0 / eps));
    double best = -1.0;
    for (int k = 1; k <= 2 * m; ++k) {
      double g = 0.0;
      for (std::uint32_t x = 0; x < nu.size(); ++x) {
        const double rounded = std::ceil(f(x) * 2 * m - 1e-12) / (2.0 * m);
        if (rounded >= static_cast<double>(k) / (2.0 * m) - 1e-15) g += nu[x] - 1.0 / 64.0;
      }
      best = std::max(best, g);
    }
    CHECK(result.achieved_gap == doctest::Approx(best).epsilon(1e-9));
  }
}

}  // TEST_SUITE
