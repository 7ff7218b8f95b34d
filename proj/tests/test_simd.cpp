#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "jlab/rng.hpp"
#include "jlab/simd/kernels.hpp"

using jlab::simd::Word;

namespace {

std::vector<Word> random_words(std::size_t n, std::uint64_t key, int density) {
  jlab::rng::CounterStream s(key);
  std::vector<Word> w(n);
  for (auto& x : w) {
    x = s.next();
    // sparser inputs exercise the all-zero paths of intersects
    for (int k = 0; k < density; ++k) x &= s.next();
  }
  return w;
}

}  // namespace

TEST_CASE("scalar kernels on known words") {
  const auto& k = jlab::simd::scalar_kernels();
  std::vector<Word> a{0xF0ULL, 1, ~Word{0}}, b{0x0FULL, 1, 0x8000000000000000ULL};
  CHECK(k.popcount(a.data(), 3) == 4 + 1 + 64);
  CHECK(k.and_popcount(a.data(), b.data(), 3) == 2);
  CHECK(k.intersects(a.data(), b.data(), 2));
  CHECK_FALSE(k.intersects(a.data(), b.data(), 1));
  std::vector<Word> d(3);
  k.andnot_words(d.data(), a.data(), b.data(), 3);
  CHECK(d[0] == 0xF0ULL);
  CHECK(d[1] == 0);
  CHECK(d[2] == 0x7FFFFFFFFFFFFFFFULL);
  CHECK(jlab::simd::words_for_bits(0) == 0);
  CHECK(jlab::simd::words_for_bits(64) == 1);
  CHECK(jlab::simd::words_for_bits(65) == 2);
}

TEST_CASE("active table is scalar or avx2") {
  const auto& act = jlab::simd::active_kernels();
  CHECK((act.name == "scalar" || act.name == "avx2"));
}

TEST_CASE("avx2 and scalar kernels agree") {
  const auto* avx = jlab::simd::avx2_kernels();
  if (!avx) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU; skipping");
    return;
  }
  const auto& sc = jlab::simd::scalar_kernels();
  std::uint64_t key = 1;
  for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257, 1000}) {
    for (int density = 0; density < 6; ++density) {
      const auto a = random_words(n, ++key, density);
      const auto b = random_words(n, ++key, density);
      CAPTURE(n);
      CAPTURE(density);
      CHECK(sc.popcount(a.data(), n) == avx->popcount(a.data(), n));
      CHECK(sc.and_popcount(a.data(), b.data(), n) == avx->and_popcount(a.data(), b.data(), n));
      CHECK(sc.intersects(a.data(), b.data(), n) == avx->intersects(a.data(), b.data(), n));

      std::vector<Word> d1(n), d2(n);
      sc.and_words(d1.data(), a.data(), b.data(), n);
      avx->and_words(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      sc.andnot_words(d1.data(), a.data(), b.data(), n);
      avx->andnot_words(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);

      // aliased destination
      auto x1 = a, x2 = a;
      sc.and_words(x1.data(), x1.data(), b.data(), n);
      avx->and_words(x2.data(), x2.data(), b.data(), n);
      CHECK(x1 == x2);
      x1 = b;
      x2 = b;
      sc.andnot_words(x1.data(), a.data(), x1.data(), n);
      avx->andnot_words(x2.data(), a.data(), x2.data(), n);
      CHECK(x1 == x2);
    }
  }
}

TEST_CASE("single shared bit is found at every position") {
  const auto* avx = jlab::simd::avx2_kernels();
  const auto& sc = jlab::simd::scalar_kernels();
  const std::size_t n = 37;
  for (std::size_t bit = 0; bit < n * 64; bit += 13) {
    std::vector<Word> a(n, 0), b(n, 0);
    a[bit / 64] |= Word{1} << (bit % 64);
    b[bit / 64] |= Word{1} << (bit % 64);
    CHECK(sc.intersects(a.data(), b.data(), n));
    if (avx) CHECK(avx->intersects(a.data(), b.data(), n));
  }
}
