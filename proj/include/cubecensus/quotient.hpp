#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecensus/cubulation.hpp"
#include "cubecensus/subdivision.hpp"

namespace cubecensus {

struct TriangleIncidence {
  int tet = -1;      // global tetrahedron id
  int missing = -1;  // vertex type absent from the triangle
};

// Identification space of a cubulation on the flag subdivision: union-find
// classes of vertices, edges and triangles, with incidence data. Tetrahedra
// are never identified with each other.
struct QuotientComplex {
  uint32_t n_cubes = 0;

  std::vector<int> vertex_class;  // per global subdivision vertex (27 per cube)
  std::vector<int> edge_class;    // per global edge instance (98 per cube)
  std::vector<int> tri_class;     // per triangle instance (tet*4 + missing)

  long n_vertex_classes = 0;
  long n_edge_classes = 0;
  long n_triangle_classes = 0;
  long n_tets = 0;

  // Coarse cubical cell counts (V0, E0, F0, C0), read off the typed vertex
  // classes: corners, edge midpoints, face centers, cube centers.
  long coarse_vertices = 0;
  long coarse_edges = 0;
  long coarse_faces = 0;
  long coarse_cells = 0;

  std::vector<int> edge_rep;                           // instance per class
  std::vector<TriangleIncidence> tri_incidence;        // 2 per class, flattened
  std::vector<int> tri_incidence_count;                // per class

  // Maps between coarse cells and vertex classes of the subdivision.
  std::vector<int> corner_class_of_vclass;  // -1 unless class holds corners
  std::vector<int> edge_class_of_vclass;    // coarse edge id via midpoints
  std::vector<int> face_class_of_vclass;    // coarse face id via face centers

  long global_vertex(uint32_t cube, int local) const {
    return static_cast<long>(cube) * kVertsPerCube + local;
  }
  int vertex_class_of(uint32_t cube, int local) const {
    return vertex_class[static_cast<size_t>(global_vertex(cube, local))];
  }
  int tet_vertex_class(int tet, int type) const;

  long euler_characteristic() const {
    return n_vertex_classes - n_edge_classes + n_triangle_classes - n_tets;
  }
};

QuotientComplex build_quotient(const SubdividedComplex& s, const Cubulation& c);

struct LinkComponent {
  long vertices = 0;
  long edges = 0;
  long triangles = 0;
  long chi() const { return vertices - edges + triangles; }
};

// Link of one vertex class: a closed surface assembled from one triangle per
// (tetrahedron, matching corner) incidence, glued along shared triangle
// classes. Degenerate only when the pseudomanifold condition fails.
struct LinkSurface {
  int vertex_class = -1;
  int sample_cube = 0;
  int sample_local = 0;  // a representative subdivision vertex
  bool degenerate = false;
  std::vector<LinkComponent> components;

  bool connected() const { return components.size() == 1; }
  bool is_sphere() const {
    return !degenerate && connected() && components[0].chi() == 2;
  }
  long chi() const {
    long c = 0;
    for (const auto& k : components) c += k.chi();
    return c;
  }
};

struct PseudomanifoldCheck {
  bool ok = true;
  std::vector<int> bad_triangle_classes;
};

PseudomanifoldCheck check_pseudomanifold(const QuotientComplex& q);

// Throws NotPseudomanifold when the 2-incidence condition fails.
std::vector<LinkSurface> vertex_links(const QuotientComplex& q);

struct ManifoldCertificate {
  bool is_manifold = false;
  bool pseudomanifold = false;
  std::vector<int> bad_triangle_classes;
  std::vector<int> bad_vertex_classes;  // link not a sphere

  std::string describe() const;
};

// True iff the quotient is a pseudomanifold and every vertex link is a
// connected surface of Euler characteristic 2. Failures are listed, not
// thrown.
ManifoldCertificate is_closed_3_manifold(const QuotientComplex& q);

// Orientation propagation across shared triangles; throws NotAManifold unless
// is_closed_3_manifold holds.
bool is_orientable(const QuotientComplex& q);

// Human-readable name of a subdivision vertex, e.g. "c0.midpoint(e5)".
std::string vertex_class_name(const QuotientComplex& q, int vclass);

}  // namespace cubecensus
