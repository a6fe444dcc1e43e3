#include "kstab/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace kstab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr std::array<std::pair<std::string_view, Family>, 12> kFamilies{{
    {"kn_tight", Family::kn_tight},
    {"mn_matching", Family::mn_matching},
    {"cycle", Family::cycle},
    {"path", Family::path},
    {"wheel", Family::wheel},
    {"circulant", Family::circulant},
    {"stable3", Family::stable3},
    {"stable4", Family::stable4},
    {"even20", Family::even20},
    {"figure2", Family::figure2},
    {"lift", Family::lift},
    {"sandwich", Family::sandwich},
}};

}  // namespace

Graph kn_tight(int n) {
  require(n >= 2 && n <= kMaxVertices, "kn_tight needs 2 <= n <= 64");
  const int half = n / 2;
  std::vector<Edge> edges;
  for (int u = 0; u < half; ++u) {
    for (int v = half; v < 2 * half; ++v) edges.emplace_back(u, v);
  }
  if (n % 2 == 1) {
    for (int u = 0; u < 2 * half; ++u) edges.emplace_back(u, n - 1);
  }
  return Graph::build(n, edges);
}

Graph mn_matching(int n) {
  require(n >= 2 && n <= kMaxVertices, "mn_matching needs 2 <= n <= 64");
  const int half = n / 2;
  std::vector<Edge> edges;
  if (n % 2 == 0) {
    for (int i = 0; i < half; ++i) edges.emplace_back(i, i + half);
  } else {
    for (int i = 1; i < half; ++i) edges.emplace_back(i, i + half);
    edges.insert(edges.end(), {{0, half}, {0, 2 * half}, {half, 2 * half}});
  }
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle needs 3 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph path(int n) {
  require(n >= 1 && n <= kMaxVertices, "path needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph wheel(int n) {
  require(n >= 4 && n <= kMaxVertices, "wheel needs 4 <= n <= 64");
  std::vector<Edge> edges = cycle(n - 1).edges();
  for (int i = 0; i < n - 1; ++i) edges.emplace_back(i, n - 1);
  return Graph::build(n, edges);
}

Graph circulant(int n, std::span<const int> differences) {
  require(n >= 3 && n <= kMaxVertices, "circulant needs 3 <= N <= 64");
  std::vector<Edge> edges;
  for (int d : differences) {
    require(d >= 1 && d <= n / 2, "circulant difference " + std::to_string(d) + " outside [1, N/2]");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + d) % n);
  }
  return Graph::build(n, edges);
}

Graph circulant(int n, std::initializer_list<int> differences) {
  return circulant(n, std::span<const int>(differences.begin(), differences.size()));
}

Graph stable3_circulant(int m) {
  require(m >= 3 && 2 * m * m + 2 * m <= kMaxVertices, "stable3 needs 3 <= m <= 5");
  return circulant(2 * m * m + 2 * m, {m, m + 1});
}

Graph stable4_circulant(int m) {
  require(m >= 3 && 2 * m * m + 2 * m + 1 <= kMaxVertices, "stable4 needs 3 <= m <= 5");
  return circulant(2 * m * m + 2 * m + 1, {m, m + 1});
}

Graph even20_circulant(int k) {
  require(k >= 3 && 2 * k <= kMaxVertices, "even20 needs 3 <= k <= 32");
  return circulant(2 * k, {1, k});
}

Graph figure2() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph lift(const Graph& g, int j) {
  require(j >= 0, "lift count must be non-negative");
  require(g.order() + j <= kMaxVertices, "lift exceeds 64 vertices");
  Graph out = g;
  if (j > 0) out = disjoint_union(g, Graph::empty(j));
  return out;
}

std::vector<Edge> sandwich_optional_edges(int n) {
  const Graph outer = kn_tight(n);
  const Graph inner = mn_matching(n);
  std::vector<Edge> out;
  for (const Edge& e : outer.edges()) {
    if (!inner.adjacent(e.first, e.second)) out.push_back(e);
  }
  return out;
}

Graph sandwich(int n, const std::function<bool(const Edge&)>& include) {
  std::vector<Edge> edges = mn_matching(n).edges();
  for (const Edge& e : sandwich_optional_edges(n)) {
    if (include(e)) edges.push_back(e);
  }
  return Graph::build(n, edges);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph sandwich_sample(int n, std::uint64_t seed) {
  require(n >= 4, "sandwich_sample needs n >= 4");
  SplitMix64 rng(seed);
  return sandwich(n, [&](const Edge&) { return (rng.next() & 1U) != 0; });
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [key, family] : kFamilies) {
    if (key == name) return family;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& [key, family] : kFamilies) {
    if (family == f) return key;
  }
  return "unknown";
}

Graph construct(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::kn_tight: return kn_tight(spec.n);
    case Family::mn_matching: return mn_matching(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::path: return path(spec.n);
    case Family::wheel: return wheel(spec.n);
    case Family::circulant:
      require(!spec.differences.empty(), "circulant needs at least one difference");
      return circulant(spec.n, spec.differences);
    case Family::stable3: return stable3_circulant(spec.m);
    case Family::stable4: return stable4_circulant(spec.m);
    case Family::even20: return even20_circulant(spec.k);
    case Family::figure2: return figure2();
    case Family::lift:
      require(spec.base.has_value(), "lift needs a base graph");
      return lift(*spec.base, spec.j);
    case Family::sandwich: return sandwich_sample(spec.n, spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace kstab
