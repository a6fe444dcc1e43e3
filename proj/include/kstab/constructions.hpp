#pragma once

// Deterministic labeled generators for the extremal graph families.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

/// K_{n/2,n/2} for even n with parts {0..n/2-1} and {n/2..n-1}; for odd n
/// the tripartite K_{k,k,1} with parts {0..k-1}, {k..2k-1}, {2k}.
Graph kn_tight(int n);

/// Perfect matching i-(i+k) for n = 2k. For n = 2k+1: matching i-(i+k) for
/// i = 1..k-1 plus the triangle {0, k, 2k}, so the result is a labeled
/// subgraph of kn_tight(n).
Graph mn_matching(int n);

Graph cycle(int n);
Graph path(int n);
/// Rim is cycle(n - 1) on 0..n-2, hub is n-1.
Graph wheel(int n);

/// Vertices Z/NZ, i ~ j iff (i - j) mod N lies in D or N - D.
/// Requires 3 <= N <= 64 and 1 <= d <= N/2 for every d.
Graph circulant(int n, std::span<const int> differences);
Graph circulant(int n, std::initializer_list<int> differences);

/// circulant(2m^2 + 2m, {m, m+1}), 3 <= m <= 5.
Graph stable3_circulant(int m);
/// circulant(2m^2 + 2m + 1, {m, m+1}), 3 <= m <= 5.
Graph stable4_circulant(int m);
/// circulant(2k, {1, k}), 3 <= k <= 32.
Graph even20_circulant(int k);

/// Triangle {0,1,2} with pendant partners i-(i+3).
Graph figure2();

/// g plus j isolated vertices.
Graph lift(const Graph& g, int j);

/// Edges of kn_tight(n) that are not in mn_matching(n), sorted.
std::vector<Edge> sandwich_optional_edges(int n);

/// mn_matching(n) plus the optional edges selected by `include`.
Graph sandwich(int n, const std::function<bool(const Edge&)>& include);

/// mn_matching(n) plus a seed-driven subset of the optional edges: optional
/// edge i (in sorted order) is kept when the low bit of the i-th splitmix64
/// output for `seed` is set. Requires n >= 4.
Graph sandwich_sample(int n, std::uint64_t seed);

/// splitmix64: state += 0x9e3779b97f4a7c15, then the xor-shift-multiply mix.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

enum class Family {
  kn_tight,
  mn_matching,
  cycle,
  path,
  wheel,
  circulant,
  stable3,
  stable4,
  even20,
  figure2,
  lift,
  sandwich,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct ConstructionSpec {
  Family family = Family::cycle;
  int n = 0;
  int m = 0;
  int k = 0;
  int j = 0;  ///< isolated vertices added by `lift`
  std::uint64_t seed = 0;
  std::vector<int> differences;
  std::optional<Graph> base;  ///< input of `lift`
};

/// Dispatches to the generator for spec.family; throws std::invalid_argument
/// on missing or out-of-range parameters.
Graph construct(const ConstructionSpec& spec);

}  // namespace kstab
