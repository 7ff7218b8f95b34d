#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "jlab/montecarlo.hpp"

using namespace jlab;

#ifndef JLAB_GOLDEN_DIR
#error "JLAB_GOLDEN_DIR must point at tests/golden"
#endif

TEST_CASE("endpoint probabilities on Petersen") {
  const JohnsonParams p{5, 2, 0};
  const auto full = run_batch(p, 1.0, 50, 7);
  CHECK(full.target == 4);
  CHECK(full.successes == 50);
  CHECK(full.success_rate == 1.0);
  CHECK(full.ci.hi == 1.0);
  const auto none = run_batch(p, 0.0, 50, 7);
  CHECK(none.successes == 0);
  CHECK(none.ci.lo == 0.0);
  CHECK_THROWS_AS(run_batch(p, -0.1, 5, 7), std::invalid_argument);
}

TEST_CASE("Wilson interval") {
  // (p + z^2/2n -+ z sqrt(p(1-p)/n + z^2/4n^2)) / (1 + z^2/n) at 50/100
  const auto w = wilson95(50, 100);
  CHECK(w.lo == doctest::Approx(0.4038315303659956).epsilon(1e-12));
  CHECK(w.hi == doctest::Approx(0.5961684696340044).epsilon(1e-12));
  const auto z = wilson95(0, 10);
  CHECK(z.lo == 0.0);
  CHECK(z.hi == doctest::Approx(0.2775327998628892).epsilon(1e-12));
  const auto all = wilson95(10, 10);
  CHECK(all.hi == 1.0);
  CHECK(all.lo == doctest::Approx(1.0 - 0.2775327998628892).epsilon(1e-12));
}

TEST_CASE("worker count does not change results") {
  const JohnsonParams p{6, 3, 1};
  BatchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.record_alpha = four.record_alpha = true;
  const auto a = run_batch(p, 0.4, 60, 99, one);
  const auto b = run_batch(p, 0.4, 60, 99, four);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t t = 0; t < a.results.size(); ++t) {
    CHECK(a.results[t].seed == b.results[t].seed);
    CHECK(a.results[t].alpha == b.results[t].alpha);
    CHECK(a.results[t].exceeds_target == b.results[t].exceeds_target);
  }
  const auto s1 = sweep(p, {0.2, 0.6, 1.0}, 40, 5, one);
  const auto s4 = sweep(p, {1.0, 0.6, 0.2}, 40, 5, four);
  CHECK(to_csv(s1) == to_csv(s4));
}

TEST_CASE("coupled sweep never increases alpha along p") {
  const auto sw = sweep({7, 3, 1}, default_p_grid(), 100, 31);
  CHECK(sw.p_grid.size() == 10);
  CHECK(sw.monotonicity_checks == 900);
  CHECK(sw.monotonicity_violations == 0);
  CHECK(sw.rate_non_decreasing);
  CHECK_FALSE(sw.p0.has_value());  // s = 1
}

TEST_CASE("Petersen sweep matches the frozen CSV") {
  std::ifstream in(std::string(JLAB_GOLDEN_DIR) + "/mc_sweep_petersen.csv");
  REQUIRE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  const auto sw = sweep({5, 2, 0}, default_p_grid(), 1000, 1592590344ULL);
  CHECK(to_csv(sw) == golden.str());
}

TEST_CASE("json output") {
  const auto b = run_batch({5, 2, 0}, 0.5, 10, 3);
  const auto j = to_json(b, true);
  CHECK(j["per_trial"].size() == 10);
  CHECK(j["successes"] == b.successes);
  CHECK_FALSE(to_json(b, false).contains("per_trial"));
}
