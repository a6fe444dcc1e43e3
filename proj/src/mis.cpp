#include "kstab/mis.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "kstab/simd/kernels.hpp"

namespace kstab {

namespace {

int top_vertex_bound(Word p) { return p == 0 ? 0 : kMaxVertices - std::countl_zero(p); }

// Number of cliques in a greedy cover of p; an upper bound on alpha(G[p]).
int clique_cover_bound(const Rows& rows, Word p) {
  int cover = 0;
  while (p != 0) {
    const int v = std::countr_zero(p);
    p &= p - 1;
    Word cand = p & rows[static_cast<std::size_t>(v)];
    while (cand != 0) {
      const int u = std::countr_zero(cand);
      p &= ~bit(u);
      cand &= rows[static_cast<std::size_t>(u)];
    }
    ++cover;
  }
  return cover;
}

class Solver {
 public:
  Solver(const Graph& g, int target)
      : rows_(g.rows()), kernels_(simd::active_kernels()), target_(target), best_(target == kNoTarget ? -1 : target - 1) {}

  static constexpr int kNoTarget = std::numeric_limits<int>::max();

  void run(Word candidates) { expand(candidates, 0, 0); }

  bool found() const { return best_set_valid_; }
  int best() const { return best_; }
  Word best_set() const { return best_set_; }

 private:
  void record(Word set, int size) {
    if (size > best_) {
      best_ = size;
      best_set_ = set;
      best_set_valid_ = true;
      if (best_ >= target_) done_ = true;
    }
  }

  void expand(Word p, Word cur, int size) {
    std::array<std::uint8_t, kMaxVertices> deg{};
    // Vertices of degree 0 or 1 in G[p] belong to some maximum independent set.
    for (;;) {
      if (p == 0) break;
      kernels_.masked_degrees(rows_, top_vertex_bound(p), p, deg.data());
      bool reduced = false;
      for (Word rest = p; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (!((p >> v) & 1U)) continue;
        const Word nbrs = rows_[static_cast<std::size_t>(v)] & p;
        if (std::popcount(nbrs) <= 1 && deg[static_cast<std::size_t>(v)] <= 1) {
          cur |= bit(v);
          ++size;
          p &= ~(bit(v) | nbrs);
          reduced = true;
        }
      }
      if (!reduced) break;
    }
    if (p == 0) {
      record(cur, size);
      return;
    }
    if (size + std::popcount(p) <= best_) return;
    if (size + clique_cover_bound(rows_, p) <= best_) return;

    int degree = 0;
    const int v = kernels_.max_degree_vertex(rows_, p, p, &degree);
    expand(p & ~(bit(v) | rows_[static_cast<std::size_t>(v)]), cur | bit(v), size + 1);
    if (done_) return;
    expand(p & ~bit(v), cur, size);
  }

  const Rows& rows_;
  const simd::KernelTable& kernels_;
  int target_;
  int best_;
  Word best_set_ = 0;
  bool best_set_valid_ = false;
  bool done_ = false;
};

void check_candidates(const Graph& g, VertexSet s) {
  if (s.bits() & ~low_bits(g.order())) throw std::invalid_argument("vertex set names labels >= n");
}

void collect_maximum(const Rows& rows, Word p, Word cur, int size, int alpha, std::vector<VertexSet>& out) {
  if (size == alpha) {
    out.emplace_back(cur);
    return;
  }
  if (p == 0 || size + std::popcount(p) < alpha || size + clique_cover_bound(rows, p) < alpha) return;
  const int v = std::countr_zero(p);
  collect_maximum(rows, p & ~(bit(v) | rows[static_cast<std::size_t>(v)]), cur | bit(v), size + 1, alpha, out);
  collect_maximum(rows, p & ~bit(v), cur, size, alpha, out);
}

}  // namespace

MisResult max_independent_set_within(const Graph& g, VertexSet candidates) {
  check_candidates(g, candidates);
  Solver solver(g, Solver::kNoTarget);
  solver.run(candidates.bits());
  return MisResult{solver.best(), VertexSet{solver.best_set()}};
}

int alpha_within(const Graph& g, VertexSet candidates) { return max_independent_set_within(g, candidates).alpha; }

MisResult max_independent_set(const Graph& g) { return max_independent_set_within(g, g.vertices()); }

int alpha(const Graph& g) { return max_independent_set(g).alpha; }

std::optional<VertexSet> find_independent_set(const Graph& g, VertexSet candidates, int target) {
  check_candidates(g, candidates);
  if (target <= 0) return VertexSet{};
  if (target > candidates.size()) return std::nullopt;
  Solver solver(g, target);
  solver.run(candidates.bits());
  if (!solver.found()) return std::nullopt;
  return VertexSet{solver.best_set()};
}

int clique_number(const Graph& g) { return alpha(complement(g)); }

std::vector<VertexSet> all_max_independent_sets(const Graph& g) {
  if (g.order() > 32) throw std::invalid_argument("all_max_independent_sets is limited to 32 vertices");
  const int a = alpha(g);
  std::vector<VertexSet> out;
  collect_maximum(g.rows(), g.vertices().bits(), 0, 0, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Matching> saturating_matching(const Graph& g, VertexSet y) {
  check_candidates(g, y);
  if (!is_independent(g, y)) throw std::invalid_argument("saturating_matching: set is not independent");
  const Word other = g.vertices().bits() & ~y.bits();
  std::array<int, kMaxVertices> match_of_other;  // partner in y, or -1
  match_of_other.fill(-1);

  // Kuhn's augmenting paths, trying partners in increasing label order.
  auto augment = [&](auto&& self, int u, Word& visited) -> bool {
    for (Word rest = g.row(u) & other & ~visited; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((visited >> w) & 1U) continue;
      visited |= bit(w);
      int& owner = match_of_other[static_cast<std::size_t>(w)];
      if (owner < 0 || self(self, owner, visited)) {
        owner = u;
        return true;
      }
    }
    return false;
  };

  for (int u : y) {
    Word visited = 0;
    if (!augment(augment, u, visited)) return std::nullopt;
  }
  Matching m;
  for (int w = 0; w < g.order(); ++w) {
    if (match_of_other[static_cast<std::size_t>(w)] >= 0) m.pairs.emplace_back(match_of_other[static_cast<std::size_t>(w)], w);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace kstab
