#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "kstab/canonical.hpp"
#include "kstab/constructions.hpp"
#include "kstab/mis.hpp"
#include "kstab/stability.hpp"

using namespace kstab;

namespace {

bool edges_subset(const Graph& a, const Graph& b) {
  for (int v = 0; v < a.order(); ++v) {
    if (a.row(v) & ~b.row(v)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("kn_tight") {
    const Graph k33 = kn_tight(6);
    CHECK(k33.edge_count() == 9);
    CHECK(alpha(k33) == 3);
    CHECK(alpha(kn_tight(7)) == 3);
    CHECK(kn_tight(7).degree(6) == 6);
    for (int n = 2; n <= 12; ++n) CHECK(is_stable(kn_tight(n), 1, 0));
    CHECK_THROWS_AS(kn_tight(1), std::invalid_argument);
  }

  TEST_CASE("mn_matching") {
    CHECK(mn_matching(8).edge_count() == 4);
    CHECK(mn_matching(7).edge_count() == 5);
    for (int n = 2; n <= 12; ++n) CHECK(is_tight_stable(mn_matching(n), 1, 0));
    for (int n = 2; n <= 64; ++n) CHECK(edges_subset(mn_matching(n), kn_tight(n)));
    CHECK_THROWS_AS(mn_matching(1), std::invalid_argument);
  }

  TEST_CASE("cycles, paths, wheels") {
    for (int n = 1; n <= 12; ++n) CHECK(alpha(path(n)) == (n + 1) / 2);
    for (int n = 3; n <= 12; ++n) CHECK(is_tight_stable(path(n), 2, 1));
    CHECK(wheel(4) == complement(Graph::empty(4)));
    CHECK(wheel(7).degree(6) == 6);
    CHECK(remove_vertices(wheel(9), VertexSet::of({8})) == cycle(8));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(wheel(3), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
  }

  TEST_CASE("circulants") {
    const Graph c = circulant(6, {1, 3});
    CHECK(c.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(c.degree(v) == 3);
    const Graph g = circulant(24, {3, 4});
    for (int v = 0; v < 24; ++v) CHECK(g.degree(v) == 4);
    CHECK(alpha(g) == 9);
    CHECK(circulant(5, {1, 2}) == complement(Graph::empty(5)));
    CHECK_THROWS_AS(circulant(6, {4}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(6, {0}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(65, {1}), std::invalid_argument);

    // degree = 2|D| - [N even and N/2 in D]
    for (int n = 3; n <= 64; ++n) {
      for (int d1 = 1; d1 <= n / 2; d1 += 3) {
        for (int d2 = d1 + 1; d2 <= n / 2; d2 += 5) {
          const Graph h = circulant(n, {d1, d2});
          const int expected = 4 - ((n % 2 == 0 && (d1 == n / 2 || d2 == n / 2)) ? 1 : 0);
          for (int v = 0; v < n; ++v) REQUIRE(h.degree(v) == expected);
        }
      }
    }
  }

  TEST_CASE("stability circulants") {
    CHECK(stable3_circulant(3).order() == 24);
    CHECK(stable3_circulant(4).order() == 40);
    CHECK(stable3_circulant(5).order() == 60);
    CHECK(stable4_circulant(3).order() == 25);
    CHECK(stable4_circulant(5).order() == 61);
    CHECK(alpha(stable3_circulant(3)) == 9);
    CHECK(alpha(stable3_circulant(4)) == 16);
    CHECK_THROWS_AS(stable3_circulant(2), std::invalid_argument);
    CHECK_THROWS_AS(stable3_circulant(6), std::invalid_argument);
    CHECK_THROWS_AS(stable4_circulant(6), std::invalid_argument);
  }

  TEST_CASE("even-order circulant family") {
    CHECK(canonical(even20_circulant(3)) == canonical(kn_tight(6)));
    CHECK(alpha(even20_circulant(3)) == 3);
    CHECK_FALSE(is_tight_stable(even20_circulant(3), 2, 0));
    CHECK(is_tight_stable(even20_circulant(4), 2, 0));
    CHECK(is_tight_stable(even20_circulant(6), 2, 0));
    CHECK_FALSE(is_stable(even20_circulant(5), 2, 0));
    CHECK_THROWS_AS(even20_circulant(2), std::invalid_argument);
    CHECK_THROWS_AS(even20_circulant(33), std::invalid_argument);
  }

  TEST_CASE("figure 2 graph") {
    const Graph f = figure2();
    CHECK(f.order() == 6);
    CHECK(f.edge_count() == 6);
    CHECK(alpha(f) == 3);
    CHECK(is_tight_stable(f, 1, 0));
    CHECK(contains_triangle(f));
    CHECK(stable_vertex_count(f) == 6);
  }

  TEST_CASE("lift") {
    const Graph c5 = cycle(5);
    CHECK(lift(c5, 0) == c5);
    CHECK(alpha(lift(c5, 3)) == 5);
    CHECK(is_tight_stable(lift(c5, 1), 3, 1));
    CHECK(is_tight_stable(lift(cycle(7), 2), 4, 2));
    CHECK_THROWS_AS(lift(Graph::empty(60), 5), std::invalid_argument);
  }

  TEST_CASE("tight witnesses for every order and offset") {
    for (int n = 3; n <= 12; ++n) {
      for (int l = 0; l <= n - 3; ++l) {
        CHECK(is_tight_stable(lift(kn_tight(n - l), l), l + 1, l));
        const int m = n - l;
        const Graph base = m % 2 == 1 ? cycle(m) : wheel(m);
        CHECK(is_tight_stable(lift(base, l), l + 2, l));
      }
    }
  }

  TEST_CASE("sandwich") {
    for (int n = 4; n <= 20; ++n) {
      CHECK(sandwich(n, [](const Edge&) { return true; }) == kn_tight(n));
      CHECK(sandwich(n, [](const Edge&) { return false; }) == mn_matching(n));
      const auto optional = sandwich_optional_edges(n);
      CHECK(static_cast<int>(optional.size()) == kn_tight(n).edge_count() - mn_matching(n).edge_count());
      CHECK(std::is_sorted(optional.begin(), optional.end()));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = sandwich_sample(8, seed);
      CHECK(is_tight_stable(g, 1, 0));
      CHECK(g == sandwich_sample(8, seed));
      CHECK(edges_subset(mn_matching(8), g));
      CHECK(edges_subset(g, kn_tight(8)));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_tight_stable(sandwich_sample(9, seed), 1, 0));
    CHECK_THROWS_AS(sandwich_sample(3, 0), std::invalid_argument);
  }

  TEST_CASE("splitmix64 reference values") {
    // first outputs for seed 1234567, as published with the generator
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
  }

  TEST_CASE("dispatch") {
    ConstructionSpec spec;
    spec.family = Family::stable3;
    spec.m = 3;
    CHECK(construct(spec) == stable3_circulant(3));
    spec = {};
    spec.family = Family::circulant;
    spec.n = 8;
    spec.differences = {1, 4};
    CHECK(construct(spec) == circulant(8, {1, 4}));
    spec = {};
    spec.family = Family::lift;
    spec.base = cycle(5);
    spec.j = 2;
    CHECK(construct(spec) == lift(cycle(5), 2));
    spec = {};
    spec.family = Family::lift;
    CHECK_THROWS_AS(construct(spec), std::invalid_argument);
    CHECK(parse_family("even20") == Family::even20);
    CHECK_FALSE(parse_family("petersen").has_value());
    for (Family f : {Family::kn_tight, Family::mn_matching, Family::cycle, Family::path, Family::wheel, Family::circulant,
                     Family::stable3, Family::stable4, Family::even20, Family::figure2, Family::lift, Family::sandwich}) {
      CHECK(parse_family(family_name(f)) == f);
    }
  }
}
