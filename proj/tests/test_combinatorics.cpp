#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "jlab/combinatorics.hpp"
#include "jlab/errors.hpp"
#include "jlab/oracles.hpp"
#include "jlab/rng.hpp"

using namespace jlab;

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, 2) == 0);
  CHECK(binomial(600, 1) == 600);  // past the memo table
  CHECK(binomial(600, 599) == 600);
  CHECK(binomial_u64(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial_u64(100, 50), std::overflow_error);
}

TEST_CASE("polynomial extension") {
  CHECK(binomial_poly(-1, 3) == -1);
  CHECK(binomial_poly(-3, 2) == 6);
  CHECK(binomial_poly(7, 3) == 35);
  CHECK(binomial_poly(2, 5) == 0);
  CHECK(binomial_poly(4, -1) == 0);
}

TEST_CASE("Pascal recurrence against the 64-bit oracle") {
  for (int a = 0; a <= 60; ++a)
    for (int b = 0; b <= a; ++b) {
      REQUIRE(binomial(a, b) == oracles::pascal_binomial(a, b));
      if (a > 0 && b > 0) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
}

TEST_CASE("Vandermonde and hockey-stick on small ranges") {
  for (long long m = 0; m <= 12; ++m)
    for (long long n = 0; n <= 12; ++n)
      for (long long k = 0; k <= m + n; ++k) {
        BigInt sum = 0;
        for (long long j = 0; j <= k; ++j) sum += binomial(m, j) * binomial(n, k - j);
        CHECK(sum == binomial(m + n, k));
      }
  for (long long n = 0; n <= 30; ++n)
    for (long long k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (long long j = k; j <= n; ++j) sum += binomial(j, k);
      CHECK(sum == binomial(n + 1, k + 1));
    }
}

TEST_CASE("log helpers") {
  CHECK(log_of(BigInt(1)) == doctest::Approx(0.0));
  CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(std::isinf(log_binomial(3, 5)));
  CHECK(log_binomial(2000, 1000) == doctest::Approx(1382.26799353748).epsilon(1e-12));
  CHECK(std::isinf(to_double(binomial(5000, 2500))));
}

TEST_CASE("KSubset construction") {
  KSubset a(10, {1, 4, 7});
  CHECK(a.size() == 3);
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(5));
  CHECK(a.to_string() == "{1,4,7}");
  CHECK(KSubset::from_unsorted(10, {7, 1, 4}) == a);
  CHECK_THROWS_AS(KSubset(10, {4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(10, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(10, {1, 11}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset::from_unsorted(10, {3, 3}), std::invalid_argument);
  CHECK(a.has_mask());
  CHECK(a.mask() == ((KSubset::Mask{1} << 0) | (KSubset::Mask{1} << 3) | (KSubset::Mask{1} << 6)));
  CHECK_FALSE(KSubset(200, {1, 200}).has_mask());
}

TEST_CASE("colex rank and unrank") {
  CHECK(unrank(9, 5, 2) == KSubset(5, {4, 5}));
  CHECK(unrank(0, 5, 2) == KSubset(5, {1, 2}));
  CHECK(rank(KSubset(5, {1, 3})) == 1);
  CHECK_THROWS_AS(unrank(10, 5, 2), std::out_of_range);
  for (int n = 1; n <= 12; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto total = binomial_u64(n, r);
      for (std::uint64_t i = 0; i < total; ++i) REQUIRE(rank(unrank(i, n, r)) == i);
    }
  // colex rank does not depend on the ground set size
  CHECK(rank(KSubset(20, {2, 5, 9})) == rank(KSubset(9, {2, 5, 9})));
  CHECK(unrank(binomial_u64(60, 30) - 1, 60, 30) == KSubset(60, [] {
          std::vector<int> e;
          for (int x = 31; x <= 60; ++x) e.push_back(x);
          return e;
        }()));
}

TEST_CASE("mask and merge intersections agree") {
  rng::CounterStream s(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(s.below(200));
    const int r = static_cast<int>(s.below(static_cast<std::uint64_t>(n) + 1));
    auto pick = [&] {
      std::vector<int> e;
      for (auto v : rng::sample_distinct(s, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)))
        e.push_back(static_cast<int>(v) + 1);
      return KSubset(n, e);
    };
    const auto u = pick(), v = pick();
    int brute = 0;
    for (int x : u.elements()) brute += v.contains(x);
    CHECK(intersection_size(u, v) == brute);
    CHECK(intersection_size_merge(u, v) == brute);
  }
  CHECK_THROWS_AS(intersection_size(KSubset(5, {1}), KSubset(6, {1})), ContractViolation);
}
