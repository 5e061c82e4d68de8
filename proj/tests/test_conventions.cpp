#include <array>
#include <set>

#include "cubecensus/conventions.hpp"
#include "cubecensus/square_symmetry.hpp"
#include "doctest.h"

using namespace cubecensus;

namespace {

std::array<int, 3> coords(int v) {
  return {vertex_coord(v, 0), vertex_coord(v, 1), vertex_coord(v, 2)};
}

std::array<int, 3> sub3(std::array<int, 3> a, std::array<int, 3> b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<int, 3> cross3(std::array<int, 3> a, std::array<int, 3> b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

// Independent geometric derivation of the corner tables: the listed cycle
// must walk the face along edges, counterclockwise from outside, starting at
// the smallest vertex.
TEST_CASE("face corner cycles are the CCW-from-outside walks") {
  for (int f = 0; f < 6; ++f) {
    const auto& cyc = face_corners[f];
    int axis = face_axis(f);
    int level = face_sign(f) > 0 ? 1 : 0;
    std::set<int> expected;
    for (int v = 0; v < 8; ++v)
      if (vertex_coord(v, axis) == level) expected.insert(v);
    CHECK(std::set<int>(cyc.begin(), cyc.end()) == expected);
    CHECK(cyc[0] == *expected.begin());
    for (int p = 0; p < 4; ++p) {
      int diff = cyc[p] ^ cyc[(p + 1) % 4];
      CHECK((diff == 1 || diff == 2 || diff == 4));  // one coordinate flips
    }
    auto n = cross3(sub3(coords(cyc[1]), coords(cyc[0])),
                    sub3(coords(cyc[2]), coords(cyc[1])));
    CHECK(n[axis] * face_sign(f) > 0);
    CHECK(n[(axis + 1) % 3] == 0);
    CHECK(n[(axis + 2) % 3] == 0);
  }
}

TEST_CASE("edge tables are consistent") {
  CHECK(cube_edges.size() == 12);
  for (int e = 0; e < 12; ++e) {
    CHECK(cube_edge_index(cube_edges[e].a, cube_edges[e].b) == e);
    int f0 = faces_of_edge[e][0], f1 = faces_of_edge[e][1];
    CHECK(f0 != f1);
    CHECK(edge_slot_on_face[f0][e] >= 0);
    CHECK(edge_slot_on_face[f1][e] >= 0);
    CHECK(opposite_edge_in_face(f0, opposite_edge_in_face(f0, e)) == e);
  }
  for (int f = 0; f < 6; ++f)
    for (int j = 0; j < 4; ++j)
      CHECK(edge_slot_on_face[f][face_boundary_edge(f, j)] == j);
}

TEST_CASE("the 48 cube symmetries form a group acting faithfully") {
  const auto& t = cube_symmetries();
  std::set<std::array<uint8_t, 8>> seen;
  for (int h = 0; h < 48; ++h) {
    std::array<uint8_t, 8> key;
    for (int v = 0; v < 8; ++v) key[v] = t.vertex_map[h][v];
    seen.insert(key);
    // inverse really inverts
    for (int v = 0; v < 8; ++v)
      CHECK(t.vertex_map[t.inverse[h]][t.vertex_map[h][v]] == v);
  }
  CHECK(seen.size() == 48);
  for (int v = 0; v < 8; ++v) CHECK(t.vertex_map[0][v] == v);

  // Face action and slot action commute with the vertex permutation.
  for (int h = 0; h < 48; ++h) {
    for (int f = 0; f < 6; ++f) {
      int g = t.face_map[h][f];
      SquareSymmetry s = SquareSymmetry::from_index(t.slot_act[h][f]);
      for (int p = 0; p < 4; ++p)
        CHECK(face_corners[g][s.apply(p)] == t.vertex_map[h][face_corners[f][p]]);
    }
  }
}

TEST_CASE("entry symmetries normalize a face to face 0 with any slot map") {
  const auto& t = cube_symmetries();
  for (int g = 0; g < 6; ++g) {
    for (int s = 0; s < 8; ++s) {
      int h = t.entry_sym[g][s];
      CHECK(t.face_map[h][g] == 0);
      CHECK(t.slot_act[h][g] == s);
    }
  }
}

TEST_CASE("convention hash is stable within a run") {
  CHECK(convention_hash() == convention_hash());
  CHECK(convention_hash() != 0);
}
