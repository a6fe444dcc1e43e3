#pragma once

// Exact maximum independent sets: branch-and-bound on bit masks.

#include <optional>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

struct MisResult {
  int alpha = 0;
  VertexSet witness;
};

/// A set of vertex-disjoint edges, each stored as (y, partner) with y in the
/// saturated side.
struct Matching {
  std::vector<Edge> pairs;
};

int alpha(const Graph& g);

/// Deterministic witness: branching picks a maximum-degree vertex, lowest label
/// on ties, and the include branch is searched first.
MisResult max_independent_set(const Graph& g);

/// Restricted to the subgraph induced by `candidates` (labels unchanged). The
/// empty set has alpha 0.
int alpha_within(const Graph& g, VertexSet candidates);
MisResult max_independent_set_within(const Graph& g, VertexSet candidates);

/// Independent subset of `candidates` with at least `target` vertices, if one
/// exists. Stops at the first one found.
std::optional<VertexSet> find_independent_set(const Graph& g, VertexSet candidates, int target);

/// Clique number, solved as alpha of the complement.
int clique_number(const Graph& g);

/// Every maximum independent set, sorted by mask value. Throws
/// std::invalid_argument above 32 vertices.
std::vector<VertexSet> all_max_independent_sets(const Graph& g);

/// A matching that saturates `y` using edges from y to V \ y, or nullopt when
/// Hall's condition fails. Throws std::invalid_argument if `y` is not
/// independent.
std::optional<Matching> saturating_matching(const Graph& g, VertexSet y);

}  // namespace kstab
