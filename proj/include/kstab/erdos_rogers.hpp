#pragma once

// Exact small-order values of the Erdős–Rogers function in the
// independent-set formulation:
//
//   f_{s,s+t}(n) = min over n-vertex G with alpha(G) <= s+t-1 of
//                  max { |S| : alpha(G[S]) <= s-1 }.

#include <optional>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

inline constexpr int kMaxErdosRogersOrder = 8;

/// Largest |S| with alpha(G[S]) <= s - 1. Scans subset sizes from n down and
/// stops at the first size that has a qualifying subset. Requires s >= 1.
int max_subset_alpha_below(const Graph& g, int s);

/// Exact value over the isomorphism catalog; requires 1 <= n <= 8 and s, t >= 1.
int er_f(int n, int s, int t, int jobs = 1);

/// n - t when s > floor((n - t + 1) / 2) and s + t <= n + 1; nullopt otherwise.
std::optional<int> er_predicted(int n, int s, int t);

struct ErCell {
  int s = 0;
  int t = 0;
  std::optional<int> predicted;
  int computed = 0;
  bool match() const { return !predicted || *predicted == computed; }
};

/// Every (s, t) with s, t >= 1 and s + t <= n + 1, from one catalog pass.
/// Ordered by s, then t.
std::vector<ErCell> er_table(int n, int jobs = 1);

}  // namespace kstab
