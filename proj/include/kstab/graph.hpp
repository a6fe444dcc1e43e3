#pragma once

// Immutable simple graphs on at most 64 vertices, one adjacency word per vertex.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kstab {

inline constexpr int kMaxVertices = 64;

using Word = std::uint64_t;
using Rows = std::array<Word, kMaxVertices>;
using Edge = std::pair<int, int>;

/// Mask with the low `n` bits set (`n` in [0, 64]).
constexpr Word low_bits(int n) {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

constexpr Word bit(int v) { return Word{1} << v; }

/// A subset of vertex labels of some graph, stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  /// Set of the listed labels; throws std::invalid_argument outside [0, 64).
  static VertexSet of(std::initializer_list<int> labels);

  static constexpr VertexSet all(int n) { return VertexSet{low_bits(n)}; }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet{bits_ | bit(v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~bit(v)}; }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  std::vector<int> labels() const;
  std::string to_string() const;

  // Iterates set bits in increasing label order.
  class iterator {
   public:
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  Word bits_ = 0;
};

/// Labeled simple undirected graph with vertices 0..n-1, 1 <= n <= 64.
///
/// Rows beyond `order()` are always zero, so the row array can be handed to
/// word-parallel kernels without masking.
class Graph {
 public:
  /// Throws std::invalid_argument on n outside [1,64], out-of-range endpoints
  /// or self-loops. Duplicate pairs collapse to a single edge.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges);

  /// Edgeless graph on n vertices.
  static Graph empty(int n);

  /// Validates symmetry, loop-freeness and range of every row.
  static Graph from_rows(int n, std::span<const Word> rows);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::all(n_); }

  Word row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(int v) const { return VertexSet{row(v)}; }
  const Rows& rows() const { return rows_; }
  std::span<const Word> row_span() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool adjacent(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int v) const { return std::popcount(row(v)); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  Graph(int n, const Rows& rows) : n_(n), rows_(rows) {}

  friend Graph make_graph_unchecked(int n, const Rows& rows);

  int n_ = 1;
  Rows rows_{};
};

/// Internal constructor for transformations that preserve the invariants by
/// construction.
Graph make_graph_unchecked(int n, const Rows& rows);

/// Induced subgraph on V \ removed, relabeled 0.. in original label order.
/// Throws if `removed` covers every vertex or names labels >= n.
Graph remove_vertices(const Graph& g, VertexSet removed);

/// Induced subgraph on `keep`, relabeled in original label order. `keep` must
/// be non-empty.
Graph induced_subgraph(const Graph& g, VertexSet keep);

Graph complement(const Graph& g);

/// H's labels are shifted by order(g). Throws if the result exceeds 64 vertices.
Graph disjoint_union(const Graph& g, const Graph& h);

/// N(A): vertices outside A adjacent to some vertex of A.
VertexSet neighborhood(const Graph& g, VertexSet a);

/// True when no edge of g has both endpoints in s.
bool is_independent(const Graph& g, VertexSet s);

/// Relabels so that old vertex v becomes new_label[v]. `new_label` must be a
/// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> new_label);

bool contains_triangle(const Graph& g);

}  // namespace kstab
