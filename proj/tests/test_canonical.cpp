#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "kstab/canonical.hpp"
#include "kstab/constructions.hpp"
#include "kstab/enumeration.hpp"
#include "oracles.hpp"

using namespace kstab;

TEST_SUITE("canonical") {
  TEST_CASE("named pairs") {
    CHECK(canonical(cycle(4)) == canonical(kn_tight(4)));
    CHECK(canonical(path(3)) != canonical(Graph::build(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(canonical(even20_circulant(3)) == canonical(kn_tight(6)));
    CHECK(canonical(wheel(4)) == canonical(circulant(4, {1, 2})));
    CHECK(canonical(circulant(5, {1, 2})) == canonical(complement(Graph::empty(5))));
  }

  TEST_CASE("invariant under relabeling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 40);
      const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
      const auto perm = oracle::random_permutation(rng, n);
      CHECK(canonical(relabel(g, perm)) == canonical(g));
    }
    // highly symmetric inputs exercise the automorphism pruning
    for (const Graph& g : {stable3_circulant(3), stable4_circulant(3), even20_circulant(8), kn_tight(20), cycle(31),
                           Graph::empty(17), complement(Graph::empty(12)), lift(mn_matching(14), 5)}) {
      for (int i = 0; i < 5; ++i) {
        const auto perm = oracle::random_permutation(rng, g.order());
        CHECK(canonical(relabel(g, perm)) == canonical(g));
      }
    }
  }

  TEST_CASE("canonical form is a relabeling of the input") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 20);
      const Graph g = oracle::random_graph(rng, n, 0.4);
      const CanonicalForm f = canonical_form(g);
      std::vector<int> to_pos(static_cast<std::size_t>(n));
      for (int pos = 0; pos < n; ++pos) to_pos[static_cast<std::size_t>(f.labeling[static_cast<std::size_t>(pos)])] = pos;
      CHECK(relabel(g, to_pos) == f.graph);
    }
  }

  TEST_CASE("orbits of vertex-transitive graphs") {
    for (const Graph& g : {cycle(9), stable3_circulant(3), even20_circulant(5)}) {
      const auto f = canonical_form(g);
      for (int o : f.orbits) CHECK(o == 0);
    }
    const auto star = canonical_form(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.orbits == std::vector<int>{0, 1, 1, 1});
  }

  TEST_CASE("agrees with the permutation oracle on every labeled graph up to order 6") {
    for (int n = 1; n <= 6; ++n) {
      const int pairs = n * (n - 1) / 2;
      std::map<std::string, std::string> oracle_to_code;
      std::set<std::string> codes;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        const Graph g = oracle::labeled_graph(n, bits);
        const std::string key = oracle::permutation_code(g);
        const std::string code = canonical(g).bytes();
        auto [it, fresh] = oracle_to_code.emplace(key, code);
        if (!fresh) REQUIRE(it->second == code);  // isomorphic => equal codes
        codes.insert(code);
      }
      // non-isomorphic => distinct codes
      CHECK(codes.size() == oracle_to_code.size());
    }
  }

  TEST_CASE("agrees with the permutation oracle on the order 7 catalog") {
    std::mt19937_64 rng(29);
    const auto catalog = enumerate(7);
    std::set<std::string> oracle_codes;
    for (const auto& e : catalog) {
      oracle_codes.insert(oracle::permutation_code(e.graph));
      const auto perm = oracle::random_permutation(rng, 7);
      CHECK(canonical(relabel(e.graph, perm)) == e.code);
    }
    CHECK(oracle_codes.size() == catalog.size());
  }
}
