#pragma once

// Isomorph-free generation of all graphs of a given order by canonical
// augmentation, plus named filters over the resulting catalog.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/canonical.hpp"
#include "kstab/graph.hpp"

namespace kstab {

inline constexpr int kMaxCatalogOrder = 10;
inline constexpr int kMaxLongCatalogOrder = 11;

struct CatalogEntry {
  CanonicalCode code;
  Graph graph;  ///< the canonical relabeling
};

using GraphPredicate = std::function<bool(const Graph&)>;

struct EnumerateOptions {
  int jobs = 1;  ///< <= 0 means hardware parallelism
  bool allow_long = false;
  /// Must be closed under induced subgraphs; graphs failing it are neither
  /// reported nor extended.
  GraphPredicate hereditary;
};

/// Calls `visit` once per isomorphism class on n vertices. Calls are
/// serialized; with jobs == 1 the order is deterministic. Throws
/// std::invalid_argument when n is outside [1, 10] (or [1, 11] with
/// allow_long).
void for_each_class(int n, const EnumerateOptions& options, const std::function<void(const CatalogEntry&)>& visit);

/// All classes, sorted by canonical code.
std::vector<CatalogEntry> enumerate(int n, const EnumerateOptions& options = {});

std::uint64_t count_classes(int n, const EnumerateOptions& options = {});

/// A conjunction of named predicates, evaluated cheapest first.
///
/// Terms: `tight-stable:K,L`, `stable:K,L`, `alpha-equals:A`,
/// `alpha-at-most:A`, `edge-count-range:LO,HI`, `contains-triangle`,
/// `triangle-free`. Terms are joined with '+'.
class Filter {
 public:
  Filter() = default;

  /// Throws std::invalid_argument on unknown names or malformed arguments.
  static Filter parse(std::string_view text);

  Filter& add(std::string_view term);
  Filter& add(const Filter& other);

  bool operator()(const Graph& g) const;
  bool empty() const { return terms_.empty(); }
  std::string describe() const;

 private:
  struct Term {
    std::string text;
    int cost;
    GraphPredicate test;
  };
  std::vector<Term> terms_;
};

/// Canonical codes of all classes on n vertices passing `filter`, sorted.
std::vector<CanonicalCode> search_with(int n, const Filter& filter, const EnumerateOptions& options = {});

/// Canonical codes of all tight (k, l)-stable classes on n vertices, sorted.
/// Generation is pruned to alpha <= the tight value, which is hereditary.
std::vector<CanonicalCode> search_tight_stable(int n, int k, int l, const EnumerateOptions& options = {});

}  // namespace kstab
