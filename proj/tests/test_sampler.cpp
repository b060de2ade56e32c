#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qarena/divergence.hpp"
#include "qarena/errors.hpp"
#include "qarena/sampler.hpp"

using namespace qarena;

TEST_SUITE("sampler") {

TEST_CASE("round zero accepts immediately") {
  const GibbsGuess g(6, 0.5);
  SplitRng rng(1);
  for (int i = 0; i < 50; ++i) {
    const SampleReport r = rejection_sample(g, rng, 10);
    CHECK(r.trials_used == 1);
    CHECK(r.acceptance_estimate == 1.0);
  }
}

TEST_CASE("constant exponent gives geometric trials") {
  // Ten constant-1 witnesses at eps = 0.4: acceptance e^{-1}, mean trials e.
  GibbsGuess g(4, 0.4);
  for (int i = 0; i < 10; ++i) g = g.updated(constant_witness(4, 1.0));
  SplitRng rng(2);
  double total = 0.0;
  const int samples = 20000;
  for (int i = 0; i < samples; ++i) total += static_cast<double>(
      rejection_sample(g, rng, default_trial_cap(0.4, 10)).trials_used);
  const double mean = total / samples;
  const double expect = std::exp(1.0);
  const double se = std::sqrt((expect * expect - expect) / samples);
  CHECK(mean == doctest::Approx(expect).epsilon(5.0 * se / expect + 0.01));
}

TEST_CASE("budget exhaustion throws") {
  GibbsGuess g(4, 1.0);
  for (int i = 0; i < 10; ++i) g = g.updated(constant_witness(4, 1.0));
  // Acceptance e^{-2.5} ~ 0.082; a cap of 1 fails fast for most draws.
  SplitRng rng(3);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    try {
      rejection_sample(g, rng, 1);
    } catch (const BudgetError&) {
      ++failures;
    }
  }
  CHECK(failures > 70);
}

TEST_CASE("accepted samples follow the gibbs law") {
  SplitRng setup(4);
  const DensePmf ref = oracles::random_pmf(6, setup);
  GibbsGuess g(6, 0.5);
  g = g.updated(heavy_set_witness(ref));
  g = g.updated(optimal_distinguisher(DensePmf::uniform(6), ref).first);
  g = g.updated(heavy_set_witness(ref, 2.0 / 64.0));

  const DensePmf exact = exact_pmf(g).pmf;
  SplitRng rng(5);
  std::vector<std::uint32_t> samples;
  samples.reserve(40000);
  const auto cap = default_trial_cap(0.5, 3);
  for (int i = 0; i < 40000; ++i) {
    samples.push_back(rejection_sample(g, rng, cap).sample.bits);
  }
  CHECK(oracles::empirical_tv(exact, samples) < 0.05);
}

TEST_CASE("uniform-on-L sampling") {
  const Witness all = constant_witness(4, 1.0);
  SplitRng rng(6);
  CHECK(sample_uniform_on_L(all, rng, 1).trials_used == 1);

  std::vector<bool> single(16, false);
  single[11] = true;
  const Witness one = indicator_witness(4, single);
  double total = 0.0;
  const int reps = 4000;
  for (int i = 0; i < reps; ++i) {
    const SampleReport r = sample_uniform_on_L(one, rng, 100000);
    CHECK(r.sample.bits == 11u);
    total += static_cast<double>(r.trials_used);
  }
  const double se = std::sqrt((16.0 * 16.0 - 16.0) / reps);
  CHECK(total / reps == doctest::Approx(16.0).epsilon(4.0 * se / 16.0));

  CHECK_THROWS_AS(sample_uniform_on_L(constant_witness(4, 0.5), rng, 10), ParameterError);
}

TEST_CASE("uniform-on-L hits every member evenly") {
  SplitRng setup(7);
  const DensePmf ref = oracles::random_pmf(8, setup);
  const Witness f = heavy_set_witness(ref);
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < 256; ++x) {
    if (f(x) == 1.0) members.push_back(x);
  }
  REQUIRE(!members.empty());

  std::vector<double> target(256, 0.0);
  for (std::uint32_t m : members) target[m] = 1.0 / static_cast<double>(members.size());
  const DensePmf uniform_on_l(8, target);

  SplitRng rng(8);
  std::vector<std::uint32_t> samples;
  samples.reserve(30000);
  for (int i = 0; i < 30000; ++i) {
    samples.push_back(sample_uniform_on_L(f, rng, 100000).sample.bits);
  }
  CHECK(oracles::empirical_tv(uniform_on_l, samples) < 0.05);
}

TEST_CASE("default trial cap shape") {
  CHECK(default_trial_cap(0.5, 0) == 20);
  CHECK(default_trial_cap(0.5, 10) ==
        static_cast<std::int64_t>(std::ceil(20.0 * std::exp(1.25))));
}

}  // TEST_SUITE
