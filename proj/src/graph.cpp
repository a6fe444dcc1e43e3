#include "kstab/graph.hpp"

#include <stdexcept>

namespace kstab {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

// Compacts the bits of `word` selected by `keep` into the low bits, order preserved.
Word compress_bits(Word word, Word keep) {
  Word out = 0;
  int next = 0;
  for (Word rest = keep; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    out |= ((word >> v) & 1U) << next;
    ++next;
  }
  return out;
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> labels) {
  Word bits = 0;
  for (int v : labels) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex label out of range");
    bits |= bit(v);
  }
  return VertexSet{bits};
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph make_graph_unchecked(int n, const Rows& rows) { return Graph{n, rows}; }

Graph Graph::build(int n, std::span<const Edge> edges) {
  check_order(n);
  Rows rows{};
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph{n, rows};
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::empty(int n) {
  check_order(n);
  return Graph{n, Rows{}};
}

Graph Graph::from_rows(int n, std::span<const Word> rows) {
  check_order(n);
  if (rows.size() < static_cast<std::size_t>(n)) throw std::invalid_argument("fewer rows than vertices");
  Rows copy{};
  for (int v = 0; v < n; ++v) copy[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)];
  for (std::size_t v = static_cast<std::size_t>(n); v < rows.size(); ++v) {
    if (rows[v] != 0) throw std::invalid_argument("row beyond vertex count is non-zero");
  }
  const Word valid = low_bits(n);
  for (int v = 0; v < n; ++v) {
    const Word r = copy[static_cast<std::size_t>(v)];
    if (r & ~valid) throw std::invalid_argument("row " + std::to_string(v) + " names a vertex >= n");
    if (r & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (Word rest = r; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!((copy[static_cast<std::size_t>(u)] >> v) & 1U)) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
  return Graph{n, copy};
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Word rest = row(u) & ~low_bits(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  const Word k = keep.bits();
  if (k == 0) throw std::invalid_argument("induced subgraph on the empty set");
  if (k & ~low_bits(g.order())) throw std::invalid_argument("vertex set names labels >= n");
  Rows rows{};
  int next = 0;
  for (int v : keep) rows[static_cast<std::size_t>(next++)] = compress_bits(g.row(v), k);
  return make_graph_unchecked(next, rows);
}

Graph remove_vertices(const Graph& g, VertexSet removed) {
  if (removed.bits() & ~low_bits(g.order())) throw std::invalid_argument("vertex set names labels >= n");
  const VertexSet keep = g.vertices() - removed;
  if (keep.empty()) throw std::invalid_argument("cannot remove every vertex");
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const Word all = low_bits(n);
  Rows rows{};
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = ~g.row(v) & all & ~bit(v);
  return make_graph_unchecked(n, rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  Rows rows = g.rows();
  for (int v = 0; v < h.order(); ++v) rows[static_cast<std::size_t>(g.order() + v)] = h.row(v) << g.order();
  return make_graph_unchecked(n, rows);
}

VertexSet neighborhood(const Graph& g, VertexSet a) {
  Word acc = 0;
  for (int v : a) acc |= g.row(v);
  return VertexSet{acc & ~a.bits()};
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.row(v) & s.bits()) return false;
  }
  return true;
}

Graph relabel(const Graph& g, std::span<const int> new_label) {
  const int n = g.order();
  if (new_label.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("permutation size mismatch");
  Word seen = 0;
  for (int x : new_label) {
    if (x < 0 || x >= n || ((seen >> x) & 1U)) throw std::invalid_argument("not a permutation");
    seen |= bit(x);
  }
  Rows rows{};
  for (int v = 0; v < n; ++v) {
    Word r = 0;
    for (Word rest = g.row(v); rest != 0; rest &= rest - 1) r |= bit(new_label[static_cast<std::size_t>(std::countr_zero(rest))]);
    rows[static_cast<std::size_t>(new_label[static_cast<std::size_t>(v)])] = r;
  }
  return make_graph_unchecked(n, rows);
}

bool contains_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (Word rest = g.row(u) & ~low_bits(u + 1); rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (g.row(u) & g.row(v)) return true;
    }
  }
  return false;
}

}  // namespace kstab
