#include "kstab/erdos_rogers.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "kstab/enumeration.hpp"
#include "kstab/mis.hpp"

namespace kstab {

namespace {

void check_query(int n, int s, int t) {
  if (n < 1 || n > kMaxErdosRogersOrder) {
    throw std::invalid_argument("Erdos-Rogers order " + std::to_string(n) + " outside [1, 8]");
  }
  if (s < 1 || t < 1) throw std::invalid_argument("Erdos-Rogers parameters need s >= 1 and t >= 1");
}

bool has_subset_of_size(const Graph& g, int size, int s) {
  const int n = g.order();
  if (size == 0) return true;
  const Word last = low_bits(size) << (n - size);
  for (Word set = low_bits(size);; ) {
    if (!find_independent_set(g, VertexSet{set}, s).has_value()) return true;
    if (set == last) return false;
    const Word c = set & (~set + 1);
    const Word r = set + c;
    set = (((r ^ set) >> 2) / c) | r;
  }
}

}  // namespace

int max_subset_alpha_below(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("max_subset_alpha_below needs s >= 1");
  if (alpha(g) <= s - 1) return g.order();
  // alpha(G[S]) <= alpha(G) and sets of size s-1 always qualify.
  for (int size = g.order() - 1; size >= s; --size) {
    if (has_subset_of_size(g, size, s)) return size;
  }
  return std::min(g.order(), s - 1);
}

int er_f(int n, int s, int t, int jobs) {
  check_query(n, s, t);
  EnumerateOptions options;
  options.jobs = jobs;
  const int alpha_cap = s + t - 1;
  options.hereditary = [alpha_cap](const Graph& g) { return alpha(g) <= alpha_cap; };
  int best = std::numeric_limits<int>::max();
  for_each_class(n, options, [&](const CatalogEntry& e) { best = std::min(best, max_subset_alpha_below(e.graph, s)); });
  return best;
}

std::optional<int> er_predicted(int n, int s, int t) {
  if (s > (n - t + 1) / 2 && s + t <= n + 1) return n - t;
  return std::nullopt;
}

std::vector<ErCell> er_table(int n, int jobs) {
  check_query(n, 1, 1);
  std::vector<ErCell> cells;
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; s + t <= n + 1; ++t) cells.push_back(ErCell{s, t, er_predicted(n, s, t), std::numeric_limits<int>::max()});
  }
  EnumerateOptions options;
  options.jobs = jobs;
  std::mutex merge;
  for_each_class(n, options, [&](const CatalogEntry& e) {
    const int a = alpha(e.graph);
    std::vector<int> best_subset(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 1; s <= n; ++s) best_subset[static_cast<std::size_t>(s)] = max_subset_alpha_below(e.graph, s);
    std::lock_guard lock(merge);
    for (ErCell& c : cells) {
      if (a <= c.s + c.t - 1) c.computed = std::min(c.computed, best_subset[static_cast<std::size_t>(c.s)]);
    }
  });
  return cells;
}

}  // namespace kstab
