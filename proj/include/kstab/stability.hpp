#pragma once

// (k, l)-stability of the independence number under vertex removal: a graph
// is (k, l)-stable when deleting any k vertices lowers alpha by at most l.
// Parameters are always validated against n > k > l >= 0.

#include <mutex>
#include <unordered_map>
#include <vector>

#include "kstab/canonical.hpp"
#include "kstab/graph.hpp"

namespace kstab {

struct StabilityProfile {
  int n = 0;
  int alpha = 0;
  /// drops[k] for k = 0..k_max; drops[0] is always 0.
  std::vector<int> drops;
  /// Vertices v with alpha(G \ {v}) == alpha(G).
  int stable_vertex_count = 0;

  int k_max() const { return static_cast<int>(drops.size()) - 1; }
  /// Same answer as is_stable for 1 <= k <= k_max().
  bool stable(int k, int l) const { return drops.at(static_cast<std::size_t>(k)) <= l; }
};

/// floor((n - k + 1) / 2) + l. Throws std::invalid_argument unless n > k > l >= 0.
int stability_bound(int n, int k, int l);

/// alpha(G) minus the least alpha(G \ S) over |S| = k, scanning S in
/// colexicographic order and stopping once the drop reaches min(k, alpha).
/// Requires 1 <= k < n.
int alpha_drop(const Graph& g, int k);

/// The same minimum without the early exit; every k-subset is evaluated.
int alpha_drop_full_scan(const Graph& g, int k);

/// Requires n > k > l >= 0. Searches for a removal set that defeats every
/// independent set of size alpha - l, branching only on vertices of the
/// current surviving witness.
bool is_stable(const Graph& g, int k, int l);

/// is_stable and alpha(G) == stability_bound(n, k, l).
bool is_tight_stable(const Graph& g, int k, int l);

/// Requires n >= 2.
int stable_vertex_count(const Graph& g);

/// floor(n - m / 2): the alpha ceiling for a graph with m stable vertices.
int stable_vertex_bound(int n, int m);

/// alpha(G) <= stable_vertex_bound(n, stable_vertex_count(G)). Requires n >= 2.
bool satisfies_stable_vertex_bound(const Graph& g);

/// Drop profile for k = 1..k_max, k_max <= n - 1 (defaults to n - 1).
StabilityProfile stability_profile(const Graph& g, int k_max = -1);

/// Thread-safe memo of full profiles keyed by canonical code.
class ProfileCache {
 public:
  StabilityProfile get(const Graph& g);
  StabilityProfile get(const Graph& g, const CanonicalCode& code);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalCode, StabilityProfile> profiles_;
};

}  // namespace kstab
