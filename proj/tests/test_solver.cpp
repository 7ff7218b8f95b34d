#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "jlab/oracles.hpp"
#include "jlab/rng.hpp"
#include "jlab/solver.hpp"

using namespace jlab;

namespace {

DenseGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  DenseGraph g(n);
  rng::CounterStream s(seed);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (s.next_uniform() < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("Petersen") {
  const auto g = build_full({5, 2, 0});
  const auto mis = max_independent_set(g);
  CHECK(mis.optimal);
  CHECK(mis.alpha == 4);
  CHECK(mis.witness.size() == 4);
  CHECK(is_independent(g, mis.witness));
  CHECK(std::is_sorted(mis.witness.begin(), mis.witness.end()));
  CHECK(alpha_at_least(g, 4).decision == Decision::yes);
  CHECK(alpha_at_least(g, 4).witness.size() == 4);
  CHECK(alpha_at_least(g, 5).decision == Decision::no);
  CHECK(alpha_at_least(g, 0).decision == Decision::yes);
}

TEST_CASE("edgeless and complete graphs") {
  DenseGraph empty(13);
  CHECK(max_independent_set(empty).alpha == 13);
  DenseGraph k(9);
  for (std::size_t u = 0; u < 9; ++u)
    for (std::size_t v = u + 1; v < 9; ++v) k.add_edge(u, v);
  CHECK(max_independent_set(k).alpha == 1);
  CHECK(max_independent_set(DenseGraph(0)).alpha == 0);
}

TEST_CASE("random graphs against brute force") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 22;
    const double p = 0.1 + 0.8 * static_cast<double>(t % 7) / 6.0;
    const auto g = random_graph(n, p, 4242 + t);
    const auto expect = oracles::brute_force_alpha(g);
    const auto mis = max_independent_set(g);
    CAPTURE(t);
    REQUIRE(mis.optimal);
    CHECK(mis.alpha == expect);
    CHECK(is_independent(g, mis.witness));
    CHECK(mis.upper_bound >= expect);
    CHECK(alpha_at_least(g, expect).decision == Decision::yes);
    CHECK(alpha_at_least(g, expect + 1).decision == Decision::no);
  }
}

TEST_CASE("Johnson graphs against exhaustive search, with and without symmetry") {
  SolverOptions plain;
  plain.use_symmetry = false;
  for (const JohnsonParams p : {JohnsonParams{6, 3, 1}, JohnsonParams{7, 3, 1}, JohnsonParams{7, 3, 0},
                                JohnsonParams{8, 3, 1}, JohnsonParams{6, 2, 1}}) {
    const auto g = build_full(p);
    const auto ref = oracles::exhaustive_alpha(g, true).alpha;
    CAPTURE(p.n);
    CAPTURE(p.r);
    CAPTURE(p.s);
    CHECK(max_independent_set(g).alpha == ref);
    CHECK(max_independent_set(g, {}, plain).alpha == ref);
  }
}

TEST_CASE("sampled Johnson graphs") {
  const auto full = build_full({7, 3, 1});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = sample_subgraph(full, 0.5, seed);
    CHECK(max_independent_set(g).alpha == oracles::exhaustive_alpha(g, false).alpha);
  }
}

TEST_CASE("optimal set sample") {
  SolverOptions o;
  o.optimal_sample_limit = 5;
  const auto mis = max_independent_set(build_full({5, 2, 0}), {}, o);
  CHECK(mis.alpha == 4);
  CHECK(!mis.optimal_sets_sample.empty());
  CHECK(mis.optimal_sets_sample.size() <= 5);
  for (const auto& s : mis.optimal_sets_sample) CHECK(s.size() == 4);
}

TEST_CASE("budget exhaustion") {
  const auto g = build_full({7, 3, 1});
  SolverBudget b;
  b.max_nodes = 1;
  const auto mis = max_independent_set(g, b);
  CHECK_FALSE(mis.optimal);
  CHECK(mis.upper_bound >= mis.alpha);
  // the root bound cannot settle this one
  const auto dense = random_graph(60, 0.5, 17);
  const auto exact = max_independent_set(dense).alpha;
  CHECK(alpha_at_least(dense, exact + 1, b).decision == Decision::unknown);
  CHECK(alpha_at_least(dense, exact + 1).decision == Decision::no);
  CHECK(std::string(to_string(Decision::unknown)) == "unknown");
}

TEST_CASE("independence predicate") {
  const auto g = build_full({5, 2, 0});
  const std::vector<Vertex> bad{0, 99};
  CHECK_THROWS_AS(is_independent(g, bad), std::out_of_range);
  const std::vector<Vertex> none;
  CHECK(is_independent(g, none));
}
