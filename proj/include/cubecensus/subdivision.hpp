#pragma once

#include <array>
#include <cstdint>

#include "cubecensus/cubulation.hpp"

namespace cubecensus {

// Flag subdivision of one cube: 48 tetrahedra, one per chain
// (corner v, edge e at v, face f containing e). A flag is indexed by
//   t = f*8 + p*2 + d
// where p is the corner slot of v on f and d selects the edge at v along the
// face boundary: d=0 the edge to slot p+1, d=1 the edge to slot p-1.
//
// Local subdivision vertex ids within one cube:
//   0..7   cube corners
//   8..19  edge midpoints (8 + cube edge index)
//   20..25 face centers (20 + face id)
//   26     cube center
// Every tetrahedron lists its vertices in type order (corner, midpoint,
// face center, cube center); identifications preserve this typing.

inline constexpr int kTetsPerCube = 48;
inline constexpr int kVertsPerCube = 27;
inline constexpr int kLocalCorner0 = 0;
inline constexpr int kLocalMid0 = 8;
inline constexpr int kLocalFaceCenter0 = 20;
inline constexpr int kLocalCenter = 26;

enum VertexType { kCorner = 0, kMidpoint = 1, kFaceCenter = 2, kCenter = 3 };

struct SubdivisionTables {
  std::array<std::array<int, 4>, kTetsPerCube> tet_vertices;  // local ids
  // Neighbor flag across the triangle missing vertex type 0/1/2; the triangle
  // missing the cube center (type 3) lies on the boundary face f of the flag.
  std::array<std::array<int, 3>, kTetsPerCube> interior_neighbor;
  // Local edge list: all vertex-id pairs occurring in some tetrahedron.
  int n_edges = 0;
  std::array<std::array<int, 2>, 98> edge_verts;
  std::array<std::array<int, 27>, 27> edge_index;  // -1 where absent
  // Edge ids of each tetrahedron, pair order (01)(02)(03)(12)(13)(23).
  std::array<std::array<int, 6>, kTetsPerCube> tet_edges;
  int n_triangles = 0;  // distinct triangles per cube (120)
};

const SubdivisionTables& subdivision();

constexpr int flag_id(int face, int slot, int d) {
  return face * 8 + slot * 2 + d;
}
constexpr int flag_face(int t) { return t / 8; }
constexpr int flag_slot(int t) { return (t % 8) / 2; }
constexpr int flag_d(int t) { return t % 2; }

// The subdivided disjoint union of n cubes, before any gluing. Tetrahedra,
// vertices and edges are addressed as cube * stride + local id.
struct SubdividedComplex {
  uint32_t n_cubes = 0;

  long n_tets() const { return static_cast<long>(n_cubes) * kTetsPerCube; }
  long n_vertices() const {
    return static_cast<long>(n_cubes) * kVertsPerCube;
  }
  long n_edge_instances() const {
    return static_cast<long>(n_cubes) * subdivision().n_edges;
  }
  long n_boundary_triangles() const {
    return static_cast<long>(n_cubes) * kTetsPerCube;
  }
};

// Validates the cubulation and returns its subdivision (48n tetrahedra,
// 48n boundary triangles, 8 per face).
SubdividedComplex subdivide(const Cubulation& c);

}  // namespace cubecensus
