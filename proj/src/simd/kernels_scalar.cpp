#include "jlab/simd/kernels.hpp"

#include <bit>

namespace jlab::simd {
namespace {

std::size_t popcount_scalar(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_words_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_words_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{
      "scalar", popcount_scalar, and_popcount_scalar, and_words_scalar, andnot_words_scalar, intersects_scalar,
  };
  return table;
}

}  // namespace jlab::simd
