#pragma once

// Isomorphism-invariant canonical forms via colour refinement plus
// individualization, with automorphism pruning of the search tree.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

/// Byte string equal for two graphs iff they are isomorphic. The bytes are
/// the graph6 encoding of the canonical relabeling.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(int n, std::string bytes) : n_(n), bytes_(std::move(bytes)) {}

  int order() const { return n_; }
  const std::string& bytes() const { return bytes_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  int n_ = 0;
  std::string bytes_;
};

struct CanonicalForm {
  Graph graph;                  ///< canonical relabeling of the input
  std::vector<int> labeling;    ///< labeling[pos] = input vertex placed at canonical position pos
  std::vector<int> orbits;      ///< orbits[v] = least vertex in the automorphism orbit of v
  std::size_t generator_count;  ///< automorphisms discovered during the search
  CanonicalCode code;
};

CanonicalForm canonical_form(const Graph& g);

CanonicalCode canonical(const Graph& g);

}  // namespace kstab

template <>
struct std::hash<kstab::CanonicalCode> {
  std::size_t operator()(const kstab::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};
