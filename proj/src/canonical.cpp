#include "kstab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "kstab/graph6.hpp"
#include "kstab/simd/kernels.hpp"

namespace kstab {

namespace {

// Ordered partition of the vertex set; each cell is a bit mask.
using Partition = std::vector<Word>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;  // root is the least label
  }

 private:
  std::vector<int> parent_;
};

// Splits every cell by neighbour counts into each cell in turn until the
// partition is equitable. Fragments are ordered by ascending count, which
// depends only on structure, so the result commutes with relabeling.
void refine(const Graph& g, Partition& cells) {
  const auto& kernels = simd::active_kernels();
  const int n = g.order();
  std::array<std::uint8_t, kMaxVertices> counts{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      kernels.masked_degrees(g.rows(), n, cells[w], counts.data());
      Partition next;
      next.reserve(cells.size() + 4);
      bool split_here = false;
      for (Word cell : cells) {
        if (std::has_single_bit(cell)) {
          next.push_back(cell);
          continue;
        }
        std::array<Word, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices;
        int hi = 0;
        for (Word rest = cell; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int c = counts[static_cast<std::size_t>(v)];
          by_count[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          next.push_back(cell);
          continue;
        }
        split_here = true;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[static_cast<std::size_t>(c)] != 0) next.push_back(by_count[static_cast<std::size_t>(c)]);
        }
      }
      if (split_here) {
        cells = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition cells{g_.vertices().bits()};
    refine(g_, cells);
    visit(cells, true);
  }

  CanonicalForm result() const {
    const Graph graph = make_graph_unchecked(n_, best_code_);
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[static_cast<std::size_t>(v)]);
    }
    std::vector<int> orbits(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) orbits[static_cast<std::size_t>(v)] = uf.find(v);
    return CanonicalForm{graph, best_lab_, std::move(orbits), generators_.size(), CanonicalCode{n_, g6_encode(graph)}};
  }

 private:
  enum class Outcome { proceed, jump };

  // Rows of the graph relabeled so that lab[i] becomes i.
  Rows leaf_code(const std::vector<int>& lab) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    Rows code{};
    for (int i = 0; i < n_; ++i) {
      Word r = 0;
      for (Word rest = g_.row(lab[static_cast<std::size_t>(i)]); rest != 0; rest &= rest - 1) {
        r |= bit(pos[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      code[static_cast<std::size_t>(i)] = r;
    }
    return code;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gen[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    generators_.push_back(std::move(gen));
  }

  Outcome leaf(const Partition& cells) {
    std::vector<int> lab;
    lab.reserve(cells.size());
    for (Word c : cells) lab.push_back(std::countr_zero(c));
    const Rows code = leaf_code(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = lab;
      first_code_ = code;
      best_lab_ = std::move(lab);
      best_code_ = code;
      return Outcome::proceed;
    }
    if (code == first_code_) {
      add_generator(first_lab_, lab);
      return Outcome::jump;
    }
    const auto cmp = std::lexicographical_compare_three_way(code.begin(), code.begin() + n_, best_code_.begin(),
                                                            best_code_.begin() + n_);
    if (cmp == 0) {
      add_generator(best_lab_, lab);
    } else if (cmp < 0) {
      best_lab_ = std::move(lab);
      best_code_ = code;
    }
    return Outcome::proceed;
  }

  // True if v shares an orbit with an explored sibling under the known
  // automorphisms that fix the current path pointwise.
  bool pruned(int v, const std::vector<int>& explored) const {
    if (explored.empty() || generators_.empty()) return false;
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : generators_) {
      const bool fixes_path =
          std::all_of(path_.begin(), path_.end(), [&](int p) { return gen[static_cast<std::size_t>(p)] == p; });
      if (!fixes_path) continue;
      any = true;
      for (int u = 0; u < n_; ++u) uf.unite(u, gen[static_cast<std::size_t>(u)]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
  }

  Outcome visit(const Partition& cells, bool first_path) {
    if (cells.size() == static_cast<std::size_t>(n_)) return leaf(cells);

    std::size_t target = 0;
    while (std::has_single_bit(cells[target])) ++target;
    const Word cell = cells[target];

    std::vector<int> explored;
    for (Word rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (pruned(v, explored)) continue;

      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(bit(v));
      child.push_back(cell & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(g_, child);

      path_.push_back(v);
      const Outcome out = visit(child, first_path && explored.empty());
      path_.pop_back();
      explored.push_back(v);
      if (out == Outcome::jump && !first_path) return Outcome::jump;
    }
    return Outcome::proceed;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<int> first_lab_;
  Rows first_code_{};
  std::vector<int> best_lab_;
  Rows best_code_{};
  std::vector<std::vector<int>> generators_;
  std::vector<int> path_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Search search(g);
  search.run();
  return search.result();
}

CanonicalCode canonical(const Graph& g) { return canonical_form(g).code; }

}  // namespace kstab
