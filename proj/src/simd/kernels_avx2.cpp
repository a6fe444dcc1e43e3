// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "kstab/simd/kernels.hpp"

namespace kstab::simd {

namespace {

// Per-lane popcount of four 64-bit words: nibble lookup, then horizontal
// byte sums with SAD against zero.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibbles);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline __m256i load_block(const Rows& rows, int first) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + first));
}

void masked_degrees_avx2(const Rows& rows, int n, Word mask, std::uint8_t* out) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  alignas(32) std::uint64_t lanes[4];
  for (int first = 0; first < n; first += 4) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(_mm256_and_si256(load_block(rows, first), m)));
    const int count = n - first < 4 ? n - first : 4;
    for (int i = 0; i < count; ++i) out[first + i] = static_cast<std::uint8_t>(lanes[i]);
  }
}

int max_degree_vertex_avx2(const Rows& rows, Word candidates, Word mask, int* degree) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  alignas(32) std::uint64_t lanes[4];
  int best = -1;
  int best_degree = -1;
  for (int first = 0; first < kMaxVertices; first += 4) {
    const Word block_candidates = (candidates >> first) & 0xfU;
    if (block_candidates == 0) continue;
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(_mm256_and_si256(load_block(rows, first), m)));
    for (Word rest = block_candidates; rest != 0; rest &= rest - 1) {
      const int lane = std::countr_zero(rest);
      const int d = static_cast<int>(lanes[lane]);
      if (d > best_degree) {
        best = first + lane;
        best_degree = d;
      }
    }
  }
  if (degree != nullptr) *degree = best_degree < 0 ? 0 : best_degree;
  return best;
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() {
  static constexpr KernelTable table{Isa::avx2, &masked_degrees_avx2, &max_degree_vertex_avx2};
  return table;
}

}  // namespace detail

}  // namespace kstab::simd
