#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "jlab/bounds.hpp"
#include "jlab/errors.hpp"
#include "jlab/logreal.hpp"

using namespace jlab;

TEST_CASE("difference of binomials") {
  CHECK(lemma_tech_lhs(10, 4, 3) == 9);
  CHECK(lemma_tech_lhs(10, 4, 0) == 0);
  const auto rep = lemma_tech_margin(10, 4, 3, 0.1);
  CHECK(rep.satisfied);  // 9 >= 0.1 * 3 * 10
  CHECK(rep.margin == doctest::Approx(std::log(9.0 / 3.0)));
  CHECK_FALSE(lemma_tech_margin(10, 4, 3, 0.5).satisfied);
  CHECK_THROWS_AS(lemma_tech_margin(3, 4, 1, 0.1), PreconditionError);
  for (long long n = 8; n <= 40; ++n)
    for (long long i = 0; i < (n + 1) / 2; ++i) CHECK(lemma_tech_truncation_holds(n, 4, i));
}

TEST_CASE("best constant on the default grid") {
  const auto b4 = lemma_tech_best_c(4, 8, 200);
  CHECK(b4.c == doctest::Approx(3.0 / 64.0).epsilon(1e-15));
  CHECK(b4.argmin_n == 8);
  CHECK(b4.argmin_i == 8);
  const auto b5 = lemma_tech_best_c(5, 10, 200);
  CHECK(b5.c == doctest::Approx(1.0 / 250.0).epsilon(1e-15));
  CHECK(b5.argmin_n == 10);
  CHECK(b5.argmin_i == 10);
  const double c2 = lemma_tech_c2(4, 8, 200);
  CHECK(c2 > 0.0);
  CHECK(c2 < 1.0);
}

TEST_CASE("Chernoff") {
  CHECK(chernoff_tail(10, 1).to_double() == doctest::Approx(0.035673993347252398).epsilon(1e-15));
  CHECK(chernoff_tail(10, 0).to_double() == 1.0);
  CHECK_THROWS_AS(chernoff_tail(-1, 1), std::invalid_argument);
  const auto rate = recompute_chernoff_rate();
  CHECK(rate.value == "1/156");
  CHECK(rate.matches_156);
  const double emp = binomial_tail_empirical(1000, 0.5, 0.1, 20000, 3);
  CHECK(emp <= chernoff_tail(500, 0.1).to_double());
  CHECK(emp == binomial_tail_empirical(1000, 0.5, 0.1, 20000, 3, 4));
}

TEST_CASE("threshold p0") {
  CHECK(p0_threshold(20, 3) == doctest::Approx(std::log(19380.0) / 120.0).epsilon(1e-15));
  CHECK(p0_threshold(20, 3) == doctest::Approx(0.0822).epsilon(1e-3));
  for (long long r = 1; r <= 8; ++r) CHECK(p0_threshold(2 * r + 1, r) == 0.75);
  CHECK(p0_threshold(20, 3, LogBase::two) == doctest::Approx(std::log2(19380.0) / 120.0).epsilon(1e-15));
  CHECK_THROWS_AS(p0_threshold(6, 3), PreconditionError);
}

TEST_CASE("extremal star values") {
  CHECK(frankl_furedi_alpha(5, 2, 0).value == 4);
  CHECK(frankl_furedi_alpha(10, 4, 1).value == 28);
  CHECK(frankl_furedi_alpha(8, 3, 1).value == 6);
  CHECK(frankl_furedi_alpha(8, 3, 1).in_regime);
  CHECK_FALSE(frankl_furedi_alpha(8, 3, 2).in_regime);
}

TEST_CASE("union bound bookkeeping") {
  const auto rep = bipartite_union_bound(20, 4);
  CHECK(rep.terms.size() == 18);
  CHECK(rep.hockey_stick_exact);
  CHECK(rep.relaxation_dominates);
  CHECK(rep.total.log_magnitude() == doctest::Approx(rep.total_sum_form.log_magnitude()).epsilon(1e-12));
  CHECK(rep.total <= rep.relaxed_total);
  CHECK_THROWS_AS(bipartite_union_bound(20, 3), UnsupportedParameters);
  const auto grid = geometric_grid(8, 100, 1.5);
  CHECK(grid.front() == 8);
  CHECK(grid.back() == 100);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
}

TEST_CASE("constants") {
  LabConstants given;
  given.c = 3.0 / 64.0;
  given.c2 = 0.5;
  given.c0 = 3.0;
  const auto k = resolve_constants(given, 4);
  CHECK(k.epsilon_prime == doctest::Approx(3.0 / 128.0));
  CHECK(k.epsilon == doctest::Approx(3.0 / 64.0 * 3.0 / 128.0));
  CHECK(k.t0 > 0.5);
  CHECK(k.t0 < 1.0);
  CHECK(k.alpha == doctest::Approx(8.0 / std::log(2.0)));

  auto bad = given;
  bad.epsilon_prime = 0.5;
  CHECK_THROWS_AS(resolve_constants(bad, 4), ConfigError);
  CHECK_THROWS_AS(resolve_constants(given, 3), ConfigError);
  auto neg = given;
  neg.c0 = -1.0;
  CHECK_THROWS_AS(resolve_constants(neg, 4), ConfigError);
  CHECK_THROWS_AS(LabConstants::from_json(nlohmann::json{{"bogus", 1}}), ConfigError);
  const auto parsed = LabConstants::from_json(nlohmann::json{{"c", 0.05}, {"log_base", "2"}});
  CHECK(*parsed.c == 0.05);
  CHECK(parsed.log_base == LogBase::two);
}

TEST_CASE("Turan chain at a moderate n") {
  LabConstants given;
  given.c0 = 3.0;
  given.c = 3.0 / 64.0;
  given.c2 = 0.5;
  const auto k = resolve_constants(given, 4);
  const auto rep = turan_chain(400, 4, k);
  CHECK(rep.chain_violations == 0);
  CHECK(rep.n0 == maximizer_crossing_n0(4, k.alpha, k.c, k.c0));
  CHECK_FALSE(rep.reports.empty());
}

TEST_CASE("edge ratio samples") {
  CHECK(edge_ratio_subset_size(20, 4) == 228);
  CHECK(edge_ratio_subset_size(10, 3) == 12);
  const auto s = edge_ratio_sample(20, 4, 11);
  CHECK(s.l == 228);
  CHECK(s.ratio == doctest::Approx(static_cast<double>(s.edges) * 20.0 / (228.0 * 228.0)));
  CHECK(s.edges == edge_ratio_sample(20, 4, 11).edges);
  const auto sw = edge_ratio_sweep(4, 20, 23, 11, 3);
  REQUIRE(sw.size() == 4);
  CHECK(sw[0].edges == s.edges);
}

TEST_CASE("LogReal arithmetic") {
  const auto a = LogReal::from_double(3.0), b = LogReal::from_double(-5.0);
  CHECK((a + b).to_double() == doctest::Approx(-2.0));
  CHECK((a - b).to_double() == doctest::Approx(8.0));
  CHECK((a * b).to_double() == doctest::Approx(-15.0));
  CHECK((a / b).to_double() == doctest::Approx(-0.6));
  CHECK((a - a).is_zero());
  CHECK(b < a);
  CHECK(LogReal() < a);
  const auto huge = LogReal::from_log(1e6);
  CHECK((huge * huge).log_magnitude() == doctest::Approx(2e6));
  CHECK(LogReal::from_bigint(binomial(100, 50)).log_magnitude() == doctest::Approx(log_binomial(100, 50)));
  std::vector<LogReal> terms{LogReal::from_double(1), LogReal::from_double(2), LogReal::from_double(-0.5)};
  CHECK(log_sum(terms).to_double() == doctest::Approx(2.5));
  CHECK(LogReal::from_double(12346.0).to_string(3) == "1.235e+4");
  CHECK(LogReal().to_string() == "0");
}
