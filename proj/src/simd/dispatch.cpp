#include <cstdlib>
#include <string_view>

#include "kstab/simd/kernels.hpp"

namespace kstab::simd {

const KernelTable* avx2_kernels() {
#if defined(KSTAB_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(KSTAB_HAVE_NEON)
  return &detail::neon_table();  // baseline on aarch64
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("KSTAB_ISA");
    if (forced != nullptr && std::string_view{forced} == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace kstab::simd
