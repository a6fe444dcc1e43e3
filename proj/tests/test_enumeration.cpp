#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "kstab/canonical.hpp"
#include "kstab/constructions.hpp"
#include "kstab/enumeration.hpp"
#include "kstab/mis.hpp"
#include "oracles.hpp"

using namespace kstab;

TEST_SUITE("enumeration") {
  TEST_CASE("class counts match Burnside's lemma up to order 9") {
    for (int n = 1; n <= 9; ++n) {
      CAPTURE(n);
      CHECK(count_classes(n) == oracle::burnside_class_count(n));
    }
  }

  TEST_CASE("class counts match labeled dedup up to order 6") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> classes;
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        classes.insert(oracle::permutation_code(oracle::labeled_graph(n, bits)));
      }
      CHECK(count_classes(n) == classes.size());
    }
  }

  TEST_CASE("stream is duplicate-free and canonical") {
    for (int n = 1; n <= 8; ++n) {
      std::unordered_set<CanonicalCode> seen;
      std::uint64_t stream = 0;
      for_each_class(n, {}, [&](const CatalogEntry& e) {
        ++stream;
        seen.insert(e.code);
        CHECK(canonical(e.graph) == e.code);
        CHECK(e.graph.order() == n);
      });
      CHECK(seen.size() == stream);
    }
  }

  TEST_CASE("worker count does not change the result") {
    for (int n : {7, 8}) {
      const auto one = enumerate(n, {.jobs = 1});
      const auto two = enumerate(n, {.jobs = 2});
      const auto many = enumerate(n, {.jobs = 0});
      REQUIRE(one.size() == two.size());
      REQUIRE(one.size() == many.size());
      for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].code == two[i].code);
        CHECK(one[i].code == many[i].code);
      }
    }
  }

  TEST_CASE("order guard") {
    CHECK_THROWS_AS(count_classes(0), std::invalid_argument);
    CHECK_THROWS_AS(count_classes(11), std::invalid_argument);
    CHECK_THROWS_AS(count_classes(12, {.allow_long = true}), std::invalid_argument);
  }

  TEST_CASE("hereditary pruning matches filtering") {
    const auto pred = [](const Graph& g) { return alpha(g) <= 3; };
    for (int n = 4; n <= 8; ++n) {
      std::vector<CanonicalCode> pruned, filtered;
      for (const auto& e : enumerate(n, {.hereditary = pred})) pruned.push_back(e.code);
      for (const auto& e : enumerate(n)) {
        if (pred(e.graph)) filtered.push_back(e.code);
      }
      CHECK(pruned == filtered);
    }
  }

  TEST_CASE("filters") {
    CHECK(search_with(4, Filter::parse("alpha-equals:4")) == std::vector<CanonicalCode>{canonical(Graph::empty(4))});
    CHECK(search_with(6, Filter::parse("stable:2,0+alpha-equals:3")).empty());
    const auto with_tri = search_with(6, Filter::parse("tight-stable:1,0+contains-triangle"));
    CHECK(std::find(with_tri.begin(), with_tri.end(), canonical(figure2())) != with_tri.end());
    CHECK(search_with(5, Filter::parse("edge-count-range:10,10")).size() == 1);
    CHECK(search_with(5, Filter::parse("triangle-free")).size() == 14);
    CHECK(search_with(5, Filter::parse("alpha-at-most:1")).size() == 1);
    CHECK(search_with(4, Filter{}).size() == 11);

    Filter f;
    f.add("triangle-free").add(Filter::parse("alpha-equals:2"));
    CHECK_FALSE(f.empty());
    CHECK(f(cycle(5)));
    CHECK_FALSE(f(figure2()));

    CHECK_THROWS_AS(Filter::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(Filter::parse("stable:2"), std::invalid_argument);
    CHECK_THROWS_AS(Filter::parse("alpha-equals:x"), std::invalid_argument);
    CHECK_THROWS_AS(Filter::parse("edge-count-range:3,1"), std::invalid_argument);
  }

  TEST_CASE("tight searches") {
    CHECK(search_tight_stable(5, 2, 0) == std::vector<CanonicalCode>{canonical(cycle(5))});
    CHECK(search_tight_stable(6, 3, 0).empty());
    const auto six = search_tight_stable(6, 2, 0);
    CHECK(std::find(six.begin(), six.end(), canonical(wheel(6))) != six.end());
    CHECK(std::is_sorted(six.begin(), six.end()));
    for (int n : {3, 7}) CHECK(search_tight_stable(n, 2, 0) == std::vector<CanonicalCode>{canonical(cycle(n))});
    CHECK_THROWS_AS(search_tight_stable(5, 5, 0), std::invalid_argument);
  }
}
