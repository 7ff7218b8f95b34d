#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "jlab/errors.hpp"
#include "jlab/graph.hpp"

using namespace jlab;

TEST_CASE("Petersen graph") {
  const JohnsonParams p{5, 2, 0};
  const auto g = build_full(p);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  for (std::size_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.is_well_formed());
  CHECK(g.provenance().kind == Provenance::Kind::full);
}

TEST_CASE("full graphs are regular with the expected degree") {
  const JohnsonParams p{6, 3, 1};
  CHECK(p.regular_degree() == 9);
  const auto g = build_full(p);
  CHECK(g.edge_count() == 90);
  for (int n = 1; n <= 9; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s < r; ++s) {
        const JohnsonParams q{n, r, s};
        const auto h = build_full(q);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(s);
        REQUIRE(h.is_well_formed());
        for (std::size_t v = 0; v < h.vertex_count(); ++v) REQUIRE(h.degree(v) == q.regular_degree());
      }
}

TEST_CASE("n = r has a single vertex and no edges") {
  const auto g = build_full({4, 4, 1});
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parameter validation and capacity") {
  CHECK_THROWS_AS(JohnsonParams({5, 2, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(JohnsonParams({3, 4, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(build_full({30, 5, 1}), CapacityError);
  CHECK_THROWS_AS(build_full({10, 4, 1}, 100), CapacityError);
}

TEST_CASE("threads do not change the full graph") {
  const JohnsonParams p{10, 4, 1};
  CHECK(build_full(p, kDefaultVertexBudget, 1).adjacency_hash() == build_full(p, kDefaultVertexBudget, 4).adjacency_hash());
}

TEST_CASE("sampling endpoints and determinism") {
  const auto g = build_full({5, 2, 0});
  CHECK(sample_subgraph(g, 1.0, 9).edge_count() == 15);
  CHECK(sample_subgraph(g, 0.0, 9).edge_count() == 0);
  CHECK_THROWS_AS(sample_subgraph(g, 1.5, 9), std::invalid_argument);
  const auto a = sample_subgraph(g, 0.5, 123);
  const auto b = sample_subgraph(g, 0.5, 123, 3);
  CHECK(a.adjacency_hash() == b.adjacency_hash());
  CHECK(a.provenance().kind == Provenance::Kind::sampled);
  CHECK_THROWS_AS(sample_subgraph(a, 0.5, 1), ContractViolation);

  double total = 0;
  const int seeds = 400;
  for (int k = 0; k < seeds; ++k) total += static_cast<double>(sample_subgraph(g, 0.5, 1000 + k).edge_count());
  CHECK(total / seeds == doctest::Approx(7.5).epsilon(0.5 / 7.5));
}

TEST_CASE("sampled edges are nested in p for a fixed seed") {
  const auto g = build_full({7, 3, 1});
  const auto lo = sample_subgraph(g, 0.3, 5);
  const auto hi = sample_subgraph(g, 0.7, 5);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (lo.adjacent(u, v)) CHECK(hi.adjacent(u, v));
      if (hi.adjacent(u, v)) CHECK(g.adjacent(u, v));
    }
}

TEST_CASE("edge counts within a vertex list") {
  const JohnsonParams p{6, 3, 1};
  const auto g = build_full(p);
  const auto verts = johnson_vertices(p);
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  CHECK(edge_count_within(g, all) == 90);
  CHECK(edge_count_within(p, verts) == 90);
  const std::vector<Vertex> dup{0, 0, 1};
  CHECK(edge_count_within(g, dup) == (g.adjacent(0, 1) ? 1u : 0u));
  const std::vector<Vertex> bad{0, 99};
  CHECK_THROWS_AS(edge_count_within(g, bad), std::out_of_range);
}

TEST_CASE("stars") {
  const JohnsonParams p{8, 4, 1};
  const auto star = star_vertices(p);
  CHECK(star.size() == binomial_u64(6, 2));
  const auto verts = johnson_vertices(p);
  for (auto v : star) {
    CHECK(verts[v].contains(1));
    CHECK(verts[v].contains(2));
  }
}

TEST_CASE("edge-list export round trip") {
  const auto g = build_full({6, 3, 1});
  for (const auto& h : {g, sample_subgraph(g, 0.4, 77)}) {
    std::stringstream ss;
    export_edge_list(ss, h);
    const auto back = import_edge_list(ss);
    CHECK(back.adjacency_hash() == h.adjacency_hash());
    CHECK(back.params() == h.params());
  }
  std::istringstream bad("# n r s p seed\n5 2 0 1 -\n0 1\n");  // {1,2} and {1,3} intersect
  CHECK_THROWS(import_edge_list(bad));
}
