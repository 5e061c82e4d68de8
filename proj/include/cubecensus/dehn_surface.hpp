#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubecensus/cubulation.hpp"
#include "cubecensus/quotient.hpp"

namespace cubecensus {

// A germ of the singular set at a triple point. Locally the surface is three
// coordinate planes; the six rays along the double curves are labeled by the
// faces of the dual cube, and the four region strips along a ray by the
// boundary edges of that face.
struct TriplePointGerm {
  int triple_point = -1;
  int ray = -1;  // 0..5
};

struct DoubleEdge {
  bool is_circle = false;
  std::array<TriplePointGerm, 2> ends;  // arcs only
  // Strip j at ends[0] continues as strip strip_map[j] at ends[1]; this is
  // the boundary-edge action of the dual face gluing and determines it.
  std::array<int, 4> strip_map = {0, 1, 2, 3};
};

struct RegionGerm {
  int double_edge = -1;
  int end = -1;  // 0, 1 for arcs; -1 on double circles
  int strip = -1;
};

// Component of the surface minus its singular set.
struct Region {
  long chi = 1;
  long boundary_circles = 1;
  std::vector<RegionGerm> boundary_word;  // cyclic crossing sequence
  long panel_count = 0;                   // dual quadrants, when constructed

  bool is_disc() const { return chi == 1 && boundary_circles == 1; }
};

struct ComplementComponent {
  bool is_ball = false;
  std::vector<int> regions;  // incident region ids
};

struct SurfaceComponent {
  long chi = 0;
};

// Cell structure of a (quasi-)filling Dehn surface.
struct DehnSurfaceComplex {
  long n_triple_points = 0;
  std::vector<DoubleEdge> double_edges;
  std::vector<Region> regions;
  std::vector<ComplementComponent> complement;
  std::vector<SurfaceComponent> surface_components;

  long surface_chi() const {
    long c = 0;
    for (const auto& s : surface_components) c += s.chi;
    return c;
  }
};

struct FillingStatus {
  bool triple_points_nonempty = false;
  bool edges_are_intervals = false;
  bool regions_are_discs = false;
  bool complement_is_balls = false;

  bool filling() const {
    return triple_points_nonempty && edges_are_intervals && regions_are_discs &&
           complement_is_balls;
  }
  bool quasi_filling() const { return complement_is_balls; }
  const char* first_failing_flag() const;
};

struct DualCounts {
  long triple_points = 0;
  long double_edges = 0;
  long regions = 0;
  long complement_components = 0;
  long surface_chi = 0;
};

DualCounts dual_counts(const DehnSurfaceComplex& d);

// Dual filling surface of a closed-manifold cubulation: triple points <->
// cubes, double edges <-> faces, regions <-> edges, complement components <->
// vertices. Throws NotAManifold otherwise.
DehnSurfaceComplex dual_surface(const Cubulation& c);
DehnSurfaceComplex dual_surface(const Cubulation& c, const QuotientComplex& q);

// Inverse construction: one cube per triple point, faces glued by following
// the region strips along each double edge. Throws NotFilling with the first
// failing flag named.
Cubulation dual_cubulation(const DehnSurfaceComplex& d);

// Evaluates the four flags; throws MalformedComplex when the local germ-count
// invariants (6 germs per triple point, valid strip maps) fail.
FillingStatus filling_status(const DehnSurfaceComplex& d);

// Adds a small sphere meeting the surface in one circle inside the given
// region. Preserves the triple point count and quasi-filling; the surface
// gains a sphere component, three regions and two ball components appear.
DehnSurfaceComplex bubble_move(const DehnSurfaceComplex& d, int site);

}  // namespace cubecensus
