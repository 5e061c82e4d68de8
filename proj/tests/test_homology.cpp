#include <random>

#include "cubecensus/enumeration.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/homology.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubecensus;
using namespace cubecensus::testing;

TEST_CASE("abelian group rendering and parsing") {
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK(AbelianGroup::free(1).to_string() == "Z");
  CHECK(AbelianGroup::free(3).to_string() == "Z^3");
  CHECK(AbelianGroup::cyclic(2).to_string() == "Z/2");
  AbelianGroup g{1, {Integer(2), Integer(4)}};
  CHECK(g.to_string() == "Z + Z/2 + Z/4");
  for (const auto& s : {"0", "Z", "Z^3", "Z/2", "Z + Z/2 + Z/4", "Z^2 + Z/6"})
    CHECK(parse_abelian_group(s).to_string() == s);
  CHECK_THROWS_AS(parse_abelian_group("Z/1"), ParseError);
  CHECK_THROWS_AS(parse_abelian_group("Q"), ParseError);

  // primary decomposition is display-only
  CHECK(AbelianGroup::cyclic(6).to_string_primary() == "Z/2 + Z/3");
  CHECK(AbelianGroup::cyclic(12).to_string_primary() == "Z/3 + Z/4");
  CHECK(AbelianGroup{1, {Integer(2), Integer(6)}}.to_string_primary() ==
        "Z + Z/2 + Z/2 + Z/3");
  CHECK(AbelianGroup::cyclic(8).to_string_primary() == "Z/8");
}

TEST_CASE("three-torus homology (Z, Z^3, Z^3, Z)") {
  auto h = homology(quotient_of(three_torus()));
  CHECK(h[0] == AbelianGroup::free(1));
  CHECK(h[1] == AbelianGroup::free(3));
  CHECK(h[2] == AbelianGroup::free(3));
  CHECK(h[3] == AbelianGroup::free(1));
}

TEST_CASE("antipodal quotient homology (Z, Z/2, 0, Z)") {
  auto h = homology(quotient_of(antipodal()));
  CHECK(h[0] == AbelianGroup::free(1));
  CHECK(h[1] == AbelianGroup::cyclic(2));
  CHECK(h[2].is_trivial());
  CHECK(h[3] == AbelianGroup::free(1));
}

TEST_CASE("Klein-bottle product: H1 = Z^2 + Z/2, H3 = 0") {
  auto h = homology(quotient_of(klein_times_circle()));
  CHECK(h[0] == AbelianGroup::free(1));
  CHECK(h[1] == AbelianGroup{2, {Integer(2)}});
  CHECK(h[2] == AbelianGroup{1, {Integer(2)}});
  CHECK(h[3].is_trivial());
}

TEST_CASE("two-cube torus has the same homology as the one-cube torus") {
  auto h = homology(quotient_of(three_torus_two_cubes()));
  CHECK(h[1] == AbelianGroup::free(3));
  CHECK(h[3] == AbelianGroup::free(1));
}

TEST_CASE("boundary of boundary vanishes on every candidate") {
  for (const auto& p : enumerate_pairings(1)) {
    for (uint64_t code = 0; code < 512; code += 29) {
      auto q = quotient_of(gluing_at(p, code, false));
      CHECK(boundary_squares_to_zero(build_chain_complex(q)));
    }
  }
}

TEST_CASE("homology refuses non-manifold quotients") {
  bool tested = false;
  for (const auto& p : enumerate_pairings(1)) {
    for (uint64_t code = 0; code < 512 && !tested; code += 3) {
      auto q = quotient_of(gluing_at(p, code, false));
      if (is_closed_3_manifold(q).is_manifold) continue;
      CHECK_THROWS_AS(homology(q), NotAManifold);
      tested = true;
    }
  }
  CHECK(tested);
}

TEST_CASE("homology ranks reproduce chi = 0 on manifold candidates") {
  std::mt19937_64 rng(5);
  auto ps = enumerate_pairings(1);
  int manifolds = 0;
  while (manifolds < 15) {
    auto c = gluing_at(ps[rng() % ps.size()], rng() % 512, false);
    auto q = quotient_of(c);
    if (!is_closed_3_manifold(q).is_manifold) continue;
    ++manifolds;
    auto h = homology(q);
    long chi = h[0].free_rank - h[1].free_rank + h[2].free_rank -
               h[3].free_rank;
    CHECK(chi == 0);
    CHECK(q.euler_characteristic() == 0);
    CHECK(h[0] == AbelianGroup::free(1));
    bool orientable = is_orientable(q);
    CHECK(h[3] == (orientable ? AbelianGroup::free(1) : AbelianGroup{}));
  }
}

TEST_CASE("H1 is invariant under relabeling") {
  std::mt19937_64 rng(9);
  auto ps = enumerate_pairings(1);
  int manifolds = 0;
  while (manifolds < 8) {
    auto c = gluing_at(ps[rng() % ps.size()], rng() % 512, false);
    auto q = quotient_of(c);
    if (!is_closed_3_manifold(q).is_manifold) continue;
    ++manifolds;
    auto h1 = homology(q)[1];
    for (int k = 0; k < 4; ++k) {
      auto rc = relabel_one_cube(c, static_cast<int>(rng() % 48));
      CHECK(homology(quotient_of(rc))[1] == h1);
    }
  }
}
