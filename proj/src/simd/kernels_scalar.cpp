#include <bit>

#include "kstab/simd/kernels.hpp"

namespace kstab::simd {

namespace {

void masked_degrees_scalar(const Rows& rows, int n, Word mask, std::uint8_t* out) {
  for (int v = 0; v < n; ++v) out[v] = static_cast<std::uint8_t>(std::popcount(rows[static_cast<std::size_t>(v)] & mask));
}

int max_degree_vertex_scalar(const Rows& rows, Word candidates, Word mask, int* degree) {
  int best = -1;
  int best_degree = -1;
  for (Word rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(rows[static_cast<std::size_t>(v)] & mask);
    if (d > best_degree) {
      best = v;
      best_degree = d;
    }
  }
  if (degree != nullptr) *degree = best_degree < 0 ? 0 : best_degree;
  return best;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static constexpr KernelTable table{Isa::scalar, &masked_degrees_scalar, &max_degree_vertex_scalar};
  return table;
}

}  // namespace kstab::simd
