#include "cubecensus/conventions.hpp"

#include <cassert>
#include <cstring>

#include "cubecensus/square_symmetry.hpp"

namespace cubecensus {

namespace {

CubeSymmetryTables build_tables() {
  CubeSymmetryTables t{};
  // Enumerate signed axis permutations: image coordinate i reads source
  // coordinate perm[i], negated when sign bit i is set.
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  int k = 0;
  for (int pi = 0; pi < 6; ++pi) {
    for (int signs = 0; signs < 8; ++signs, ++k) {
      for (int v = 0; v < 8; ++v) {
        int img = 0;
        for (int i = 0; i < 3; ++i) {
          int c = vertex_coord(v, perms[pi][i]);
          if (signs & (1 << i)) c = 1 - c;
          img |= c << i;
        }
        t.vertex_map[k][v] = static_cast<uint8_t>(img);
      }
    }
  }
  assert(t.vertex_map[0][5] == 5);  // index 0 is the identity

  // Face images and slot actions follow from the vertex permutation.
  for (int h = 0; h < 48; ++h) {
    for (int f = 0; f < 6; ++f) {
      int v0 = t.vertex_map[h][face_corners[f][0]];
      int g = -1;
      for (int cand = 0; cand < 6; ++cand) {
        bool all = true;
        for (int p = 0; p < 4 && all; ++p)
          all = slot_on_face[cand][t.vertex_map[h][face_corners[f][p]]] >= 0;
        if (all) {
          g = cand;
          break;
        }
      }
      assert(g >= 0);
      t.face_map[h][f] = static_cast<uint8_t>(g);
      int q0 = slot_on_face[g][v0];
      int q1 = slot_on_face[g][t.vertex_map[h][face_corners[f][1]]];
      SquareSymmetry s;
      if (((q1 - q0) & 3) == 1)
        s = {static_cast<uint8_t>(q0), false};
      else
        s = {static_cast<uint8_t>(q0), true};
      for (int p = 0; p < 4; ++p)
        assert(slot_on_face[g][t.vertex_map[h][face_corners[f][p]]] ==
               s.apply(p));
      t.slot_act[h][f] = s.index();
    }
  }

  for (int h = 0; h < 48; ++h) {
    for (int g = 0; g < 48; ++g) {
      bool inv = true;
      for (int v = 0; v < 8 && inv; ++v)
        inv = t.vertex_map[g][t.vertex_map[h][v]] == v;
      if (inv) {
        t.inverse[h] = static_cast<uint8_t>(g);
        break;
      }
    }
  }

  // For each face g and each D4 element s there is exactly one symmetry
  // carrying g to face 0 with slot action s.
  for (int g = 0; g < 6; ++g)
    for (int s = 0; s < 8; ++s) t.entry_sym[g][s] = 255;
  for (int h = 0; h < 48; ++h) {
    for (int g = 0; g < 6; ++g) {
      if (t.face_map[h][g] == 0) {
        assert(t.entry_sym[g][t.slot_act[h][g]] == 255);
        t.entry_sym[g][t.slot_act[h][g]] = static_cast<uint8_t>(h);
      }
    }
  }
  for (int g = 0; g < 6; ++g)
    for (int s = 0; s < 8; ++s) assert(t.entry_sym[g][s] != 255);

  return t;
}

}  // namespace

const CubeSymmetryTables& cube_symmetries() {
  static const CubeSymmetryTables tables = build_tables();
  return tables;
}

uint64_t convention_hash() {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  for (const auto& face : face_corners)
    for (int v : face) mix(static_cast<uint64_t>(v));
  for (const auto& e : cube_edges) {
    mix(static_cast<uint64_t>(e.a));
    mix(static_cast<uint64_t>(e.b));
  }
  const auto& t = cube_symmetries();
  for (int k = 0; k < 48; ++k) {
    for (int v = 0; v < 8; ++v) mix(t.vertex_map[k][v]);
    for (int f = 0; f < 6; ++f) {
      mix(t.face_map[k][f]);
      mix(t.slot_act[k][f]);
    }
  }
  return h;
}

}  // namespace cubecensus
