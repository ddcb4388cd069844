#include <cstdlib>
#include <string_view>

#include "flaglab/simd/kernels.hpp"

namespace flaglab::simd {

#ifdef FLAGLAB_HAVE_AVX2
namespace detail {
const KernelSet& avx2_kernel_table();
}
#endif

const KernelSet* avx2_kernels() {
#if defined(FLAGLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  if (supported) return &detail::avx2_kernel_table();
#endif
  return nullptr;
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* forced = std::getenv("FLAGLAB_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar_kernels();
    if (const KernelSet* avx = avx2_kernels()) return avx;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace flaglab::simd
