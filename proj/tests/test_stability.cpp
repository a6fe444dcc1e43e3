#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kstab/constructions.hpp"
#include "kstab/enumeration.hpp"
#include "kstab/mis.hpp"
#include "kstab/stability.hpp"
#include "oracles.hpp"

using namespace kstab;

TEST_SUITE("stability") {
  TEST_CASE("bound") {
    CHECK(stability_bound(6, 3, 0) == 2);
    CHECK(stability_bound(7, 2, 1) == 4);
    for (int n = 2; n <= 20; ++n) CHECK(stability_bound(n, 1, 0) == n / 2);
    CHECK_THROWS_AS(stability_bound(5, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(stability_bound(5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(stability_bound(5, 2, -1), std::invalid_argument);
  }

  TEST_CASE("alpha drop") {
    CHECK(alpha_drop(cycle(5), 2) == 0);
    CHECK(alpha_drop(complement(Graph::empty(6)), 5) == 0);
    CHECK(alpha_drop(kn_tight(6), 2) == 1);
    CHECK_THROWS_AS(alpha_drop(cycle(5), 0), std::invalid_argument);
    CHECK_THROWS_AS(alpha_drop(cycle(5), 5), std::invalid_argument);
  }

  TEST_CASE("predicate") {
    CHECK(is_stable(kn_tight(6), 1, 0));
    for (int k = 1; k < 7; ++k) CHECK(is_stable(complement(Graph::empty(7)), k, 0));
    CHECK_FALSE(is_stable(path(4), 2, 0));
    CHECK_THROWS_AS(is_stable(path(4), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_stable(path(4), 4, 0), std::invalid_argument);
  }

  TEST_CASE("tightness") {
    CHECK(is_tight_stable(cycle(7), 2, 0));
    CHECK(is_tight_stable(wheel(6), 2, 0));
    CHECK_FALSE(is_tight_stable(cycle(6), 2, 0));
    CHECK_FALSE(is_stable(cycle(6), 2, 0));
  }

  TEST_CASE("stable vertices") {
    CHECK(stable_vertex_count(kn_tight(4)) == 4);
    CHECK(stable_vertex_count(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
    CHECK(stable_vertex_count(mn_matching(4)) == 4);
    CHECK(stable_vertex_count(figure2()) == 6);
    CHECK_THROWS_AS(stable_vertex_count(Graph::empty(1)), std::invalid_argument);
    CHECK(stable_vertex_bound(8, 2) == 7);
    CHECK(stable_vertex_bound(8, 3) == 6);
    for (int n = 2; n <= 12; ++n) CHECK(satisfies_stable_vertex_bound(complement(Graph::empty(n))));
    for (int n : {6, 8}) {
      for (int m : {2, 4, 6}) {
        const Graph g = lift(kn_tight(m), n - m);
        CHECK(stable_vertex_count(g) == m);
        CHECK(alpha(g) == stable_vertex_bound(n, m));
      }
    }
  }

  TEST_CASE("early exit and full scan agree on 1000 random graphs") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      CHECK(alpha_drop(g, k) == alpha_drop_full_scan(g, k));
    }
  }

  TEST_CASE("matches the subset-table oracle") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 400; ++i) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
      const auto expected = oracle::drops(g);
      const auto profile = stability_profile(g);
      REQUIRE(profile.k_max() == n - 1);
      for (int k = 1; k < n; ++k) {
        REQUIRE(profile.drops[static_cast<std::size_t>(k)] == expected[static_cast<std::size_t>(k)]);
        REQUIRE(alpha_drop(g, k) == expected[static_cast<std::size_t>(k)]);
        for (int l = 0; l < k; ++l) REQUIRE(is_stable(g, k, l) == (expected[static_cast<std::size_t>(k)] <= l));
      }
    }
  }

  TEST_CASE("profile invariants over the order 8 catalog") {
    for (const auto& e : enumerate(8)) {
      const auto p = stability_profile(e.graph);
      for (int k = 1; k <= p.k_max(); ++k) {
        const int d = p.drops[static_cast<std::size_t>(k)];
        CHECK(d >= p.drops[static_cast<std::size_t>(k - 1)]);
        CHECK(d <= std::min(k, p.alpha));
        for (int l = 0; l < k; ++l) {
          if (!p.stable(k, l)) continue;
          if (k >= 2 && l < k - 1) CHECK(p.stable(k - 1, l));
          if (l + 1 < k) CHECK(p.stable(k, l + 1));
        }
      }
      CHECK(p.stable_vertex_count >= 0);
      CHECK(p.stable_vertex_count <= 8);
    }
  }

  TEST_CASE("witness search on larger circulants") {
    CHECK(is_stable(stable3_circulant(3), 3, 0));
    CHECK(is_stable(stable3_circulant(4), 3, 0));
    CHECK(is_stable(stable4_circulant(3), 4, 0));
    CHECK_FALSE(is_stable(stable3_circulant(3), 20, 0));
    CHECK_FALSE(is_stable(even20_circulant(3), 2, 0));
    // every removal set evaluated
    CHECK(alpha_drop_full_scan(stable3_circulant(3), 3) == 0);
    CHECK(alpha_drop_full_scan(stable4_circulant(3), 4) == 0);
  }

  TEST_CASE("profile cache") {
    ProfileCache cache;
    const auto a = cache.get(cycle(7));
    const int perm[] = {3, 1, 4, 0, 6, 2, 5};
    const auto b = cache.get(relabel(cycle(7), perm));
    CHECK(cache.size() == 1);
    CHECK(a.drops == b.drops);
  }
}
