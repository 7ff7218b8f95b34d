#pragma once
// Word-parallel bitset kernels.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The active table is chosen once at first use from the
// running CPU's capabilities; JLAB_SIMD=scalar in the environment forces the
// scalar table. Both tables must produce identical results for every input
// (tests/test_simd.cpp checks this on randomized word arrays).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace jlab::simd {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

struct Kernels {
  std::string_view name;
  // Number of set bits in a[0..n).
  std::size_t (*popcount)(const Word* a, std::size_t n);
  // popcount(a & b).
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  // dst = a & b. dst may alias a or b.
  void (*and_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst = a & ~b. dst may alias a or b.
  void (*andnot_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // (a & b) != 0.
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
};

const Kernels& scalar_kernels();

// nullptr when the AVX2 variants were not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels();

const Kernels& active_kernels();

inline constexpr std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace jlab::simd
