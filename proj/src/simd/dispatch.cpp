#include <cstdlib>
#include <string_view>

#include "jlab/simd/kernels.hpp"

namespace jlab::simd {

#if defined(JLAB_HAVE_AVX2_KERNELS)
const Kernels& avx2_kernel_table();
#endif

const Kernels* avx2_kernels() {
#if defined(JLAB_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
    if (const char* env = std::getenv("JLAB_SIMD"); env && std::string_view(env) == "scalar") {
      return scalar_kernels();
    }
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace jlab::simd
