#include "kstab/stability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kstab/mis.hpp"

namespace kstab {

namespace {

void check_parameters(int n, int k, int l) {
  if (!(n > k && k > l && l >= 0)) {
    throw std::invalid_argument("stability parameters must satisfy n > k > l >= 0 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  }
}

void check_removal_size(const Graph& g, int k) {
  if (k < 1 || k >= g.order()) {
    throw std::invalid_argument("removal size k=" + std::to_string(k) + " outside [1, " + std::to_string(g.order() - 1) + "]");
  }
}

// Next k-subset in colexicographic order (Gosper's hack).
Word next_subset(Word s) {
  const Word c = s & (~s + 1);
  const Word r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

template <typename Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  const Word limit = low_bits(n);
  for (Word s = low_bits(k); s != 0 && (s & ~limit) == 0; s = next_subset(s)) {
    if (!visit(s)) return;
    if (s == (low_bits(k) << (n - k))) return;  // last subset; avoids overflow at n = 64
  }
}

int drop_scan(const Graph& g, int k, bool early_exit) {
  check_removal_size(g, k);
  const Word all = g.vertices().bits();
  const int a = alpha(g);
  const int cap = std::min(k, a);
  int least = a;
  for_each_k_subset(g.order(), k, [&](Word removed) {
    const VertexSet rest{all & ~removed};
    if (!find_independent_set(g, rest, least).has_value()) least = alpha_within(g, rest);
    return !(early_exit && a - least == cap);
  });
  return a - least;
}

class StabilitySearch {
 public:
  StabilitySearch(const Graph& g, int k, int need) : g_(g), k_(k), need_(need) {}

  // False when some removal of at most k vertices leaves no independent set
  // of size need. Any k-set that defeats the current witness must contain
  // one of its vertices, so branching on witness vertices is exhaustive.
  bool holds(Word removed, int depth) {
    if (!seen_.insert(removed).second) return true;
    const auto witness = find_independent_set(g_, VertexSet{g_.vertices().bits() & ~removed}, need_);
    if (!witness) return false;
    if (depth == k_) return true;
    for (int x : *witness) {
      if (!holds(removed | bit(x), depth + 1)) return false;
    }
    return true;
  }

 private:
  const Graph& g_;
  int k_;
  int need_;
  std::unordered_set<Word> seen_;
};

}  // namespace

int stability_bound(int n, int k, int l) {
  check_parameters(n, k, l);
  return (n - k + 1) / 2 + l;
}

int alpha_drop(const Graph& g, int k) { return drop_scan(g, k, true); }

int alpha_drop_full_scan(const Graph& g, int k) { return drop_scan(g, k, false); }

bool is_stable(const Graph& g, int k, int l) {
  check_parameters(g.order(), k, l);
  const int need = alpha(g) - l;
  if (need <= 0) return true;
  StabilitySearch search(g, k, need);
  return search.holds(0, 0);
}

bool is_tight_stable(const Graph& g, int k, int l) {
  const int bound = stability_bound(g.order(), k, l);
  return alpha(g) == bound && is_stable(g, k, l);
}

int stable_vertex_count(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("stable_vertex_count needs at least 2 vertices");
  const int a = alpha(g);
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (find_independent_set(g, g.vertices().without(v), a).has_value()) ++count;
  }
  return count;
}

int stable_vertex_bound(int n, int m) { return n - (m + 1) / 2; }

bool satisfies_stable_vertex_bound(const Graph& g) {
  return alpha(g) <= stable_vertex_bound(g.order(), stable_vertex_count(g));
}

StabilityProfile stability_profile(const Graph& g, int k_max) {
  const int n = g.order();
  if (k_max < 0) k_max = n - 1;
  if (k_max > n - 1) throw std::invalid_argument("profile k_max must be below n");
  StabilityProfile p;
  p.n = n;
  p.alpha = alpha(g);
  p.drops.assign(static_cast<std::size_t>(k_max) + 1, 0);
  for (int k = 1; k <= k_max; ++k) {
    // Drops never decrease with k; once saturated at alpha no scan is needed.
    const int previous = p.drops[static_cast<std::size_t>(k) - 1];
    p.drops[static_cast<std::size_t>(k)] = previous == p.alpha ? p.alpha : alpha_drop(g, k);
  }
  p.stable_vertex_count = n >= 2 ? stable_vertex_count(g) : 0;
  return p;
}

StabilityProfile ProfileCache::get(const Graph& g) { return get(g, canonical(g)); }

StabilityProfile ProfileCache::get(const Graph& g, const CanonicalCode& code) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = profiles_.find(code); it != profiles_.end()) return it->second;
  }
  StabilityProfile p = stability_profile(g);
  std::lock_guard lock(mutex_);
  return profiles_.emplace(code, std::move(p)).first->second;
}

std::size_t ProfileCache::size() const {
  std::lock_guard lock(mutex_);
  return profiles_.size();
}

}  // namespace kstab
