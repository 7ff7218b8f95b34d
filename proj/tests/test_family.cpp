#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "jlab/errors.hpp"
#include "jlab/family.hpp"
#include "jlab/family_io.hpp"
#include "jlab/graph.hpp"

using namespace jlab;

namespace {

std::vector<KSubset> star(int n, int r, int i, int j) {
  std::vector<KSubset> out;
  for (const auto& v : johnson_vertices({n, r, 1}))
    if (v.contains(i) && v.contains(j)) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("a full star") {
  const auto A = star(10, 4, 1, 2);
  const auto st = analyze_family(10, 4, A);
  CHECK(st.d_value == 28);
  CHECK(st.best_center == std::pair{1, 2});
  CHECK(st.x == 0);
  CHECK(st.i_of_X == 0);
  CHECK(build_ess(st, A).size() == A.size());
}

TEST_CASE("center ties break lexicographically") {
  const std::vector<KSubset> A{KSubset(6, {1, 2, 3})};
  const auto st = analyze_family(6, 3, A);
  CHECK(st.d_value == 1);
  CHECK(st.best_center == std::pair{1, 2});
  const auto empty = analyze_family(6, 3, {});
  CHECK(empty.d_value == 0);
  CHECK(empty.best_center == std::pair{1, 2});
}

TEST_CASE("star plus an outside member") {
  auto A = star(10, 4, 1, 2);
  A.push_back(KSubset(10, {3, 4, 5, 6}));
  const auto st = analyze_family(10, 4, A);
  CHECK(st.d_value == 28);
  CHECK(st.x == 1);
  CHECK(st.i_of_X == 4);
  CHECK(st.I_of_X == std::vector<int>{3, 4, 5, 6});
  const auto ess = build_ess(st, A);
  CHECK(ess.size() == A.size());
  CHECK(std::find(ess.begin(), ess.end(), KSubset(10, {3, 4, 5, 6})) != ess.end());
}

TEST_CASE("relabeling puts the center last") {
  std::vector<KSubset> A{KSubset(8, {2, 5, 7}), KSubset(8, {1, 5, 7}), KSubset(8, {3, 4, 6})};
  const auto st = analyze_family(8, 3, A);
  CHECK(st.best_center == std::pair{5, 7});
  CHECK(st.relabel[5] == 7);
  CHECK(st.relabel[7] == 8);
  for (const auto& a : A) CHECK(st.to_original(st.to_relabeled(a)) == a);
  for (int e : st.I_relabeled()) CHECK(e <= 6);
}

TEST_CASE("invalid families") {
  const std::vector<KSubset> wrong_size{KSubset(6, {1, 2})};
  CHECK_THROWS_AS(analyze_family(6, 3, wrong_size), std::invalid_argument);
  const std::vector<KSubset> repeated{KSubset(6, {1, 2, 3}), KSubset(6, {1, 2, 3})};
  CHECK_THROWS_AS(analyze_family(6, 3, repeated), std::invalid_argument);
}

TEST_CASE("B_j construction") {
  auto A = star(12, 4, 1, 2);
  A.push_back(KSubset(12, {3, 4, 5, 6}));
  const auto st = analyze_family(12, 4, A);
  const auto bj = build_bj(12, 4, st);
  REQUIRE(bj.B_sets.size() == 4);
  CHECK(bj.B_sets[0].size() == 6);
  const auto chk = check_bj(bj);
  CHECK(chk.all());
  CHECK(chk.first_failure.empty());

  const auto st3 = analyze_family(12, 3, std::vector<KSubset>{KSubset(12, {1, 2, 3}), KSubset(12, {4, 5, 6})});
  CHECK_THROWS_AS(build_bj(12, 3, st3), UnsupportedParameters);
  CHECK_THROWS_AS(build_bj(12, 4, analyze_family(12, 4, star(12, 4, 1, 2))), PreconditionError);
}

TEST_CASE("random admissible instances satisfy the construction") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = random_admissible_instance(14, 4, seed);
    CHECK(inst.family.size() == binomial_u64(12, 2) + 1);
    const auto st = analyze_family(14, 4, inst.family);
    CHECK(st.best_center == inst.center);
    CHECK(st.x == inst.x);
    if (st.i_of_X > 0) CHECK(check_bj(build_bj(14, 4, st)).all());
  }
  CHECK(random_admissible_instance(14, 4, 3).family == random_admissible_instance(14, 4, 3).family);
}

TEST_CASE("family file format") {
  std::istringstream ok("# comment\nn=6 r=3\n1 2 3\n4 5 6\n");
  const auto f = read_family(ok);
  CHECK(f.n == 6);
  CHECK(f.r == 3);
  CHECK(f.members.size() == 2);
  std::ostringstream out;
  write_family(out, f);
  std::istringstream again(out.str());
  CHECK(read_family(again).members == f.members);

  for (const char* bad : {"1 2 3\n", "n=6 r=3\n1 2\n", "n=6 r=3\n1 2 9\n", "n=6 r=3\n1 1 2\n",
                          "n=6 r=3\n1 2 3\n3 2 1\n", "n=6 r=3\n1 x 3\n"}) {
    std::istringstream in(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(read_family(in), FormatError);
  }
  CHECK_THROWS(read_family_file("/nonexistent/family.txt"));
}
