#include <algorithm>
#include <map>
#include <set>

#include "cubecensus/conventions.hpp"
#include "cubecensus/enumeration.hpp"
#include "cubecensus/errors.hpp"
#include "doctest.h"

using namespace cubecensus;

TEST_CASE("square symmetries form the dihedral group of order 8") {
  std::set<std::array<int, 4>> images;
  for (int i = 0; i < 8; ++i) {
    SquareSymmetry s = SquareSymmetry::from_index(i);
    CHECK(s.index() == i);
    images.insert({s.apply(0), s.apply(1), s.apply(2), s.apply(3)});
  }
  CHECK(images.size() == 8);

  SquareSymmetry id;
  for (int a = 0; a < 8; ++a) {
    SquareSymmetry sa = SquareSymmetry::from_index(a);
    CHECK(compose_symmetry(id, sa) == sa);
    CHECK(compose_symmetry(sa, id) == sa);
    CHECK(compose_symmetry(sa, invert_symmetry(sa)) == id);
    CHECK(compose_symmetry(invert_symmetry(sa), sa) == id);
    for (int b = 0; b < 8; ++b) {
      SquareSymmetry sb = SquareSymmetry::from_index(b);
      SquareSymmetry ab = compose_symmetry(sa, sb);
      for (int p = 0; p < 4; ++p) CHECK(ab.apply(p) == sa.apply(sb.apply(p)));
      for (int c = 0; c < 8; ++c) {
        SquareSymmetry sc = SquareSymmetry::from_index(c);
        CHECK(compose_symmetry(compose_symmetry(sa, sb), sc) ==
              compose_symmetry(sa, compose_symmetry(sb, sc)));
      }
    }
  }

  SquareSymmetry quarter{1, false};
  SquareSymmetry four = compose_symmetry(
      quarter, compose_symmetry(quarter, compose_symmetry(quarter, quarter)));
  CHECK(four == id);
  SquareSymmetry refl{0, true};
  CHECK(compose_symmetry(refl, refl) == id);

  // Edge action is compatible with the corner action.
  for (int i = 0; i < 8; ++i) {
    SquareSymmetry s = SquareSymmetry::from_index(i);
    for (int j = 0; j < 4; ++j) {
      std::set<int> corners = {s.apply(j), s.apply((j + 1) % 4)};
      int je = s.apply_edge(j);
      CHECK(corners == std::set<int>{je, (je + 1) % 4});
    }
  }
}

TEST_CASE("pairing counts: 15 at one cube, 1 at zero, 10395 at two") {
  CHECK(enumerate_pairings(1).size() == 15);
  auto zero = enumerate_pairings(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].pairs.empty());
  CHECK(enumerate_pairings(2).size() == 10395);
}

TEST_CASE("every emitted pairing is a perfect matching") {
  for (uint32_t n : {1u, 2u}) {
    for (const auto& p : enumerate_pairings(n)) {
      CHECK_NOTHROW(validate_pairing(p));
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_pairings(1) == enumerate_pairings(1));
  auto p = enumerate_pairings(1)[3];
  auto a = enumerate_gluings(p);
  auto b = enumerate_gluings(p);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("one-cube pairings fall into 3 symmetry classes of sizes 1,6,8") {
  auto ps = enumerate_pairings(1);
  auto cls = pairing_symmetry_classes(ps);
  REQUIRE(cls.representatives.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& m : cls.members) sizes.insert(m.size());
  CHECK(sizes == std::multiset<size_t>{1, 6, 8});
}

// Brute-force orbit oracle, independent of pairing_symmetry_classes: two
// pairings are equivalent iff some symmetry maps one onto the other.
TEST_CASE("symmetry classes agree with a direct orbit computation") {
  const auto& sym = cube_symmetries();
  auto ps = enumerate_pairings(1);
  auto key = [](FacePairing p) {
    for (auto& pr : p.pairs)
      if (pr.second < pr.first) std::swap(pr.first, pr.second);
    std::sort(p.pairs.begin(), p.pairs.end());
    return p.pairs;
  };
  auto apply = [&](const FacePairing& p, int h) {
    FacePairing q = p;
    for (auto& pr : q.pairs) {
      pr.first.face = sym.face_map[h][pr.first.face];
      pr.second.face = sym.face_map[h][pr.second.face];
    }
    return q;
  };
  auto cls = pairing_symmetry_classes(ps);
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = 0; j < ps.size(); ++j) {
      bool equivalent = false;
      for (int h = 0; h < 48 && !equivalent; ++h)
        equivalent = key(apply(ps[i], h)) == key(ps[j]);
      CHECK(equivalent == (cls.class_of[i] == cls.class_of[j]));
    }
  }

  // the all-opposite pairing is alone in its class
  FacePairing opp;
  opp.n_cubes = 1;
  opp.pairs = {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}, {{0, 4}, {0, 5}}};
  for (size_t i = 0; i < ps.size(); ++i) {
    if (key(ps[i]) == key(opp))
      CHECK(cls.members[static_cast<size_t>(cls.class_of[i])].size() == 1);
  }
}

TEST_CASE("applying any cube symmetry leaves the pairing class unchanged") {
  const auto& sym = cube_symmetries();
  auto ps = enumerate_pairings(1);
  auto cls = pairing_symmetry_classes(ps);
  auto find_index = [&](const FacePairing& p) {
    auto norm = p;
    std::sort(norm.pairs.begin(), norm.pairs.end());
    for (size_t i = 0; i < ps.size(); ++i)
      if (ps[i].pairs == norm.pairs) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < ps.size(); ++i) {
    for (int h = 0; h < 48; ++h) {
      FacePairing q = ps[i];
      for (auto& pr : q.pairs) {
        pr.first.face = sym.face_map[h][pr.first.face];
        pr.second.face = sym.face_map[h][pr.second.face];
        if (pr.second < pr.first) std::swap(pr.first, pr.second);
      }
      int j = find_index(q);
      REQUIRE(j >= 0);
      CHECK(cls.class_of[static_cast<size_t>(j)] == cls.class_of[i]);
    }
  }
}

TEST_CASE("pairing_symmetry_classes rejects malformed input") {
  FacePairing bad;
  bad.n_cubes = 1;
  bad.pairs = {{{0, 0}, {0, 0}}, {{0, 2}, {0, 3}}, {{0, 4}, {0, 5}}};
  CHECK_THROWS_AS(pairing_symmetry_classes({bad}), MalformedPairing);
}

TEST_CASE("gluing counts: 512 per pairing, 7680 total, 192 transversal") {
  auto ps = enumerate_pairings(1);
  uint64_t total = 0;
  for (const auto& p : ps) {
    CHECK(gluing_count(p, false) == 512);
    total += enumerate_gluings(p).size();
  }
  CHECK(total == 7680);

  auto reps = pairing_symmetry_classes(ps).representatives;
  uint64_t transversal = 0;
  for (const auto& p : reps) {
    CHECK(gluing_count(p, true) == 64);
    auto gs = enumerate_gluings(p, true);
    transversal += gs.size();
    for (const auto& c : gs)
      for (const auto& g : c.gluings) CHECK(g.map.reflected);
  }
  CHECK(transversal == 192);
}

TEST_CASE("cubulation text round-trips bit-exactly") {
  auto ps = enumerate_pairings(1);
  for (const auto& p : ps) {
    for (uint64_t code : {0ull, 17ull, 511ull}) {
      Cubulation c = gluing_at(p, code, false);
      Cubulation back = parse_cubulation(to_text(c));
      CHECK(back == c);
      CHECK(to_text(back) == to_text(c));
    }
  }
  std::string t3 = "n=1; c0.0~c0.1:r0m; c0.2~c0.3:r0m; c0.4~c0.5:r0m";
  CHECK(to_text(parse_cubulation(t3)) == t3);
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    parse_cubulation("n=1; c0.0~c0.9:r0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 13);
  }
  CHECK_THROWS_AS(parse_cubulation("n=1; c0.0~c0.1:r7"), ParseError);
  CHECK_THROWS_AS(parse_cubulation(""), ParseError);
  CHECK_THROWS_AS(parse_cubulation("n=1; c0.0~c0.1:r0m"), ParseError);
}
