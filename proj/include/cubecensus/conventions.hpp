#pragma once

#include <array>
#include <cstdint>

namespace cubecensus {

// Labeling conventions for a single cube. Every other module consumes only
// these tables; nothing else in the codebase hard-codes cube geometry.
//
// Vertices: index = x + 2y + 4z for (x,y,z) in {0,1}^3.
// Faces:    0:+x  1:-x  2:+y  3:-y  4:+z  5:-z.
// Corner slots: face_corners[f] lists the 4 corners of face f in
// counterclockwise order as seen from outside the cube, starting at the
// smallest vertex index.
inline constexpr std::array<std::array<int, 4>, 6> face_corners = {{
    {1, 3, 7, 5},  // +x
    {0, 4, 6, 2},  // -x
    {2, 6, 7, 3},  // +y
    {0, 1, 5, 4},  // -y
    {4, 5, 7, 6},  // +z
    {0, 2, 3, 1},  // -z
}};

constexpr int face_axis(int f) { return f >> 1; }
constexpr int face_sign(int f) { return (f & 1) ? -1 : +1; }
constexpr int opposite_face(int f) { return f ^ 1; }

constexpr int vertex_coord(int v, int axis) { return (v >> axis) & 1; }

// slot_on_face[f][v] = slot of cube vertex v on face f, or -1.
constexpr std::array<std::array<int, 8>, 6> make_slot_table() {
  std::array<std::array<int, 8>, 6> t{};
  for (int f = 0; f < 6; ++f) {
    for (int v = 0; v < 8; ++v) t[f][v] = -1;
    for (int p = 0; p < 4; ++p) t[f][face_corners[f][p]] = p;
  }
  return t;
}
inline constexpr std::array<std::array<int, 8>, 6> slot_on_face = make_slot_table();

// The 12 cube edges as sorted vertex pairs, listed in lexicographic order.
struct CubeEdge {
  int a, b;
};
constexpr std::array<CubeEdge, 12> make_edge_table() {
  std::array<CubeEdge, 12> e{};
  int k = 0;
  for (int a = 0; a < 8; ++a)
    for (int axis = 0; axis < 3; ++axis) {
      int b = a ^ (1 << axis);
      if (b > a) e[k++] = {a, b};
    }
  return e;
}
inline constexpr std::array<CubeEdge, 12> cube_edges = make_edge_table();

constexpr int cube_edge_index(int a, int b) {
  if (a > b) {
    int t = a;
    a = b;
    b = t;
  }
  for (int i = 0; i < 12; ++i)
    if (cube_edges[i].a == a && cube_edges[i].b == b) return i;
  return -1;
}

// Boundary edge j of face f joins corner slots j and j+1 (mod 4).
constexpr int face_boundary_edge(int f, int j) {
  return cube_edge_index(face_corners[f][j], face_corners[f][(j + 1) % 4]);
}

// edge_slot_on_face[f][e] = j such that face_boundary_edge(f, j) == e, or -1.
constexpr std::array<std::array<int, 12>, 6> make_edge_slot_table() {
  std::array<std::array<int, 12>, 6> t{};
  for (int f = 0; f < 6; ++f) {
    for (int e = 0; e < 12; ++e) t[f][e] = -1;
    for (int j = 0; j < 4; ++j) t[f][face_boundary_edge(f, j)] = j;
  }
  return t;
}
inline constexpr std::array<std::array<int, 12>, 6> edge_slot_on_face =
    make_edge_slot_table();

// The two faces containing each cube edge, smaller face id first.
constexpr std::array<std::array<int, 2>, 12> make_edge_face_table() {
  std::array<std::array<int, 2>, 12> t{};
  for (int e = 0; e < 12; ++e) {
    int k = 0;
    for (int f = 0; f < 6; ++f)
      if (edge_slot_on_face[f][e] >= 0) t[e][k++] = f;
  }
  return t;
}
inline constexpr std::array<std::array<int, 2>, 12> faces_of_edge =
    make_edge_face_table();

constexpr int edge_axis(int e) {
  return cube_edges[e].a ^ cube_edges[e].b;  // power of two
}
constexpr int edge_axis_index(int e) {
  int m = edge_axis(e);
  return m == 1 ? 0 : (m == 2 ? 1 : 2);
}

// Opposite edge of e within face f (the boundary edge of f parallel to e).
constexpr int opposite_edge_in_face(int f, int e) {
  int j = edge_slot_on_face[f][e];
  return face_boundary_edge(f, (j + 2) % 4);
}

// ---------------------------------------------------------------------------
// The 48 combinatorial symmetries of the cube (signed axis permutations),
// tabulated as vertex permutations together with their action on faces and
// on corner slots. Symmetry 0 is the identity.

struct CubeSymmetryTables {
  std::array<std::array<uint8_t, 8>, 48> vertex_map;
  std::array<std::array<uint8_t, 6>, 48> face_map;
  // slot_act[h][f] = D4 index (rotation + 4*reflected) of the slot map
  // sigma_{h,f}: slot p of f -> slot sigma(p) of face_map[h][f].
  std::array<std::array<uint8_t, 6>, 48> slot_act;
  std::array<uint8_t, 48> inverse;
  // entry_sym[g][s] = the unique symmetry h with face_map[h][g] == 0 and
  // slot_act[h][g] == s. Used by canonical relabeling.
  std::array<std::array<uint8_t, 8>, 6> entry_sym;
};

const CubeSymmetryTables& cube_symmetries();

// FNV-1a hash over all convention tables; census files record it so stored
// data can never be compared across incompatible labelings.
uint64_t convention_hash();

}  // namespace cubecensus
