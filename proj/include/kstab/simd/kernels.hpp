#pragma once

// Word-parallel adjacency kernels with a portable scalar reference and
// ISA-specific variants chosen once at runtime.
//
// All kernels take the full 64-entry row array of a Graph; rows past the
// graph order are zero, so vector variants may read whole blocks freely.

#include <cstdint>
#include <string_view>

#include "kstab/graph.hpp"

namespace kstab::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// out[v] = popcount(rows[v] & mask) for v in [0, n).
  void (*masked_degrees)(const Rows& rows, int n, Word mask, std::uint8_t* out);

  /// Vertex of `candidates` maximizing popcount(rows[v] & mask), lowest label
  /// on ties; -1 when `candidates` is empty. Writes the degree to *degree.
  int (*max_degree_vertex)(const Rows& rows, Word candidates, Word mask, int* degree);
};

const KernelTable& scalar_kernels();

/// Null when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available table. `KSTAB_ISA=scalar` in the environment forces the
/// reference path.
const KernelTable& active_kernels();

namespace detail {
// Defined in the ISA-specific translation units, only when compiled.
const KernelTable& avx2_table();
const KernelTable& neon_table();
}  // namespace detail

}  // namespace kstab::simd
