// AVX2 variants of the bitset kernels. This translation unit is compiled
// with -mavx2 -mpopcnt and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "jlab/simd/kernels.hpp"

namespace jlab::simd {
namespace {

// Nibble-lookup popcount (Mula): per-byte counts via pshufb, then horizontal
// byte sums into four 64-bit lanes with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
  const __m128i sum128 = _mm_add_epi64(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
  return static_cast<std::size_t>(_mm_cvtsi128_si64(sum128)) +
         static_cast<std::size_t>(_mm_extract_epi64(sum128, 1));
}

inline const __m256i* as_vec(const Word* p) { return reinterpret_cast<const __m256i*>(p); }
inline __m256i* as_vec(Word* p) { return reinterpret_cast<__m256i*>(p); }

std::size_t popcount_avx2(const Word* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(as_vec(a + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(as_vec(a + i)), _mm256_loadu_si256(as_vec(b + i)));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

void and_words_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(as_vec(a + i)), _mm256_loadu_si256(as_vec(b + i)));
    _mm256_storeu_si256(as_vec(dst + i), v);
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_words_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // _mm256_andnot_si256(x, y) computes ~x & y.
    const __m256i v = _mm256_andnot_si256(_mm256_loadu_si256(as_vec(b + i)), _mm256_loadu_si256(as_vec(a + i)));
    _mm256_storeu_si256(as_vec(dst + i), v);
  }
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(as_vec(a + i)), _mm256_loadu_si256(as_vec(b + i)));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

}  // namespace

const Kernels& avx2_kernel_table() {
  static const Kernels table{
      "avx2", popcount_avx2, and_popcount_avx2, and_words_avx2, andnot_words_avx2, intersects_avx2,
  };
  return table;
}

}  // namespace jlab::simd
