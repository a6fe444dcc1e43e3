#include <doctest.h>

#include <array>
#include <random>

#include "kstab/constructions.hpp"
#include "kstab/simd/kernels.hpp"
#include "oracles.hpp"

using namespace kstab;
using namespace kstab::simd;

namespace {

void compare(const KernelTable& ref, const KernelTable& alt, std::mt19937_64& rng) {
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    const Word mask = rng() & low_bits(n);
    std::array<std::uint8_t, 64> a{}, b{};
    ref.masked_degrees(g.rows(), n, mask, a.data());
    alt.masked_degrees(g.rows(), n, mask, b.data());
    REQUIRE(a == b);

    const Word candidates = (trial % 7 == 0) ? 0 : rng() & low_bits(n);
    int da = -1, db = -1;
    const int va = ref.max_degree_vertex(g.rows(), candidates, mask, &da);
    const int vb = alt.max_degree_vertex(g.rows(), candidates, mask, &db);
    REQUIRE(va == vb);
    if (va >= 0) REQUIRE(da == db);
  }
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar reference") {
    const KernelTable& k = scalar_kernels();
    CHECK(k.isa == Isa::scalar);
    const Graph w = wheel(7);
    std::array<std::uint8_t, 64> out{};
    k.masked_degrees(w.rows(), 7, low_bits(7), out.data());
    CHECK(out[6] == 6);
    CHECK(out[0] == 3);
    int d = 0;
    CHECK(k.max_degree_vertex(w.rows(), low_bits(6), low_bits(7), &d) == 0);
    CHECK(d == 3);
    CHECK(k.max_degree_vertex(w.rows(), low_bits(7), low_bits(7), &d) == 6);
    CHECK(k.max_degree_vertex(w.rows(), 0, low_bits(7), &d) == -1);
  }

  TEST_CASE("avx2 matches scalar") {
    const KernelTable* avx2 = avx2_kernels();
    if (avx2 == nullptr) {
      MESSAGE("avx2 variant unavailable on this machine");
      return;
    }
    CHECK(avx2->isa == Isa::avx2);
    std::mt19937_64 rng(101);
    compare(scalar_kernels(), *avx2, rng);
  }

  TEST_CASE("neon matches scalar") {
    const KernelTable* neon = neon_kernels();
    if (neon == nullptr) {
      MESSAGE("neon variant unavailable on this machine");
      return;
    }
    std::mt19937_64 rng(202);
    compare(scalar_kernels(), *neon, rng);
  }

  TEST_CASE("active table") {
    const KernelTable& k = active_kernels();
    CHECK(isa_name(k.isa).size() > 0);
  }
}
