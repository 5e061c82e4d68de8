#include "cubecensus/subdivision.hpp"

#include <cassert>

#include "cubecensus/conventions.hpp"
#include "cubecensus/errors.hpp"

namespace cubecensus {

namespace {

// Cube edge of flag (f, p, d): the boundary edge of f at slot p in direction d.
int flag_cube_edge(int f, int p, int d) {
  return d == 0 ? face_boundary_edge(f, p) : face_boundary_edge(f, (p + 3) % 4);
}

SubdivisionTables build_tables() {
  SubdivisionTables s{};
  for (auto& row : s.edge_index)
    for (auto& v : row) v = -1;

  for (int t = 0; t < kTetsPerCube; ++t) {
    int f = flag_face(t), p = flag_slot(t), d = flag_d(t);
    int v = face_corners[f][p];
    int e = flag_cube_edge(f, p, d);
    s.tet_vertices[t] = {kLocalCorner0 + v, kLocalMid0 + e,
                         kLocalFaceCenter0 + f, kLocalCenter};
  }

  for (int t = 0; t < kTetsPerCube; ++t) {
    int f = flag_face(t), p = flag_slot(t), d = flag_d(t);
    // Missing corner: same edge, other endpoint.
    s.interior_neighbor[t][kCorner] =
        d == 0 ? flag_id(f, (p + 1) % 4, 1) : flag_id(f, (p + 3) % 4, 0);
    // Missing midpoint: same corner and face, other edge at the corner.
    s.interior_neighbor[t][kMidpoint] = flag_id(f, p, 1 - d);
    // Missing face center: same corner and edge, other face along the edge.
    int e = flag_cube_edge(f, p, d);
    int f2 = faces_of_edge[e][0] == f ? faces_of_edge[e][1] : faces_of_edge[e][0];
    int v = face_corners[f][p];
    int p2 = slot_on_face[f2][v];
    int d2 = flag_cube_edge(f2, p2, 0) == e ? 0 : 1;
    assert(flag_cube_edge(f2, p2, d2) == e);
    s.interior_neighbor[t][kFaceCenter] = flag_id(f2, p2, d2);
  }

  for (int t = 0; t < kTetsPerCube; ++t) {
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j, ++k) {
        int a = s.tet_vertices[t][i], b = s.tet_vertices[t][j];
        if (s.edge_index[a][b] < 0) {
          s.edge_index[a][b] = s.edge_index[b][a] = s.n_edges;
          s.edge_verts[s.n_edges] = {a, b};
          ++s.n_edges;
        }
        s.tet_edges[t][k] = s.edge_index[a][b];
      }
    }
  }
  assert(s.n_edges == 98);
  // 4 triangles per tet, interior ones shared by 2 tets, boundary by 1.
  s.n_triangles = (kTetsPerCube * 4 - kTetsPerCube) / 2 + kTetsPerCube;
  assert(s.n_triangles == 120);
  return s;
}

}  // namespace

const SubdivisionTables& subdivision() {
  static const SubdivisionTables tables = build_tables();
  return tables;
}

SubdividedComplex subdivide(const Cubulation& c) {
  validate_pairing(c.pairing());
  return SubdividedComplex{c.n_cubes};
}

}  // namespace cubecensus
