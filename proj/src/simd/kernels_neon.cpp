#include <arm_neon.h>

#include <bit>

#include "kstab/simd/kernels.hpp"

namespace kstab::simd {

namespace {

inline uint64x2_t popcount_u64x2(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

void masked_degrees_neon(const Rows& rows, int n, Word mask, std::uint8_t* out) {
  const uint64x2_t m = vdupq_n_u64(mask);
  for (int first = 0; first < n; first += 2) {
    const uint64x2_t counts = popcount_u64x2(vandq_u64(vld1q_u64(rows.data() + first), m));
    out[first] = static_cast<std::uint8_t>(vgetq_lane_u64(counts, 0));
    if (first + 1 < n) out[first + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(counts, 1));
  }
}

int max_degree_vertex_neon(const Rows& rows, Word candidates, Word mask, int* degree) {
  const uint64x2_t m = vdupq_n_u64(mask);
  int best = -1;
  int best_degree = -1;
  for (int first = 0; first < kMaxVertices; first += 2) {
    const Word block_candidates = (candidates >> first) & 0x3U;
    if (block_candidates == 0) continue;
    const uint64x2_t counts = popcount_u64x2(vandq_u64(vld1q_u64(rows.data() + first), m));
    const int lane_degree[2] = {static_cast<int>(vgetq_lane_u64(counts, 0)), static_cast<int>(vgetq_lane_u64(counts, 1))};
    for (Word rest = block_candidates; rest != 0; rest &= rest - 1) {
      const int lane = std::countr_zero(rest);
      if (lane_degree[lane] > best_degree) {
        best = first + lane;
        best_degree = lane_degree[lane];
      }
    }
  }
  if (degree != nullptr) *degree = best_degree < 0 ? 0 : best_degree;
  return best;
}

}  // namespace

namespace detail {

const KernelTable& neon_table() {
  static constexpr KernelTable table{Isa::neon, &masked_degrees_neon, &max_degree_vertex_neon};
  return table;
}

}  // namespace detail

}  // namespace kstab::simd
