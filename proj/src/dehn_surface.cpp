#include "cubecensus/dehn_surface.hpp"

#include <algorithm>
#include <cassert>

#include "cubecensus/conventions.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/union_find.hpp"

namespace cubecensus {

const char* FillingStatus::first_failing_flag() const {
  if (!triple_points_nonempty) return "triple_points_nonempty";
  if (!edges_are_intervals) return "edges_are_intervals";
  if (!regions_are_discs) return "regions_are_discs";
  if (!complement_is_balls) return "complement_is_balls";
  return "";
}

DualCounts dual_counts(const DehnSurfaceComplex& d) {
  return {d.n_triple_points, static_cast<long>(d.double_edges.size()),
          static_cast<long>(d.regions.size()),
          static_cast<long>(d.complement.size()), d.surface_chi()};
}

namespace {

// Dual quadrant panels: one per (cube, cube edge), lying in the midplane
// normal to the edge, with corners (edge midpoint, two face centers, cube
// center). Panel side s in {0,1} is the face faces_of_edge[e][s].
inline long panel_id(long cube, int e) { return cube * 12 + e; }

struct PanelGluing {
  long a, b;        // panel ids
  int sa, sb;       // glued side slot on each panel
  int edge_id;      // dual double edge (gluing index)
};

int side_slot(int e, int f) { return faces_of_edge[e][0] == f ? 0 : 1; }

}  // namespace

DehnSurfaceComplex dual_surface(const Cubulation& c) {
  auto q = build_quotient(subdivide(c), c);
  return dual_surface(c, q);
}

DehnSurfaceComplex dual_surface(const Cubulation& c, const QuotientComplex& q) {
  auto cert = is_closed_3_manifold(q);
  if (!cert.is_manifold)
    throw NotAManifold("dual surface requires a closed 3-manifold: " +
                       cert.describe());

  const long n = c.n_cubes;
  DehnSurfaceComplex d;
  d.n_triple_points = n;

  // Double edges: one arc per face gluing.
  std::vector<std::pair<int, int>> edge_of_face(static_cast<size_t>(n) * 6,
                                                {-1, -1});
  for (size_t gi = 0; gi < c.gluings.size(); ++gi) {
    const auto& g = c.gluings[gi];
    DoubleEdge e;
    e.is_circle = false;
    e.ends[0] = {static_cast<int>(g.a.cube), g.a.face};
    e.ends[1] = {static_cast<int>(g.b.cube), g.b.face};
    for (int j = 0; j < 4; ++j) e.strip_map[j] = g.map.apply_edge(j);
    d.double_edges.push_back(e);
    edge_of_face[g.a.cube * 6 + g.a.face] = {static_cast<int>(gi), 0};
    edge_of_face[g.b.cube * 6 + g.b.face] = {static_cast<int>(gi), 1};
  }

  // Panel gluings across faces; these generate both the regions (fans around
  // an edge midpoint) and, together with the in-sheet adjacencies, the
  // abstract surface.
  std::vector<PanelGluing> across;
  UnionFind region_uf(static_cast<size_t>(n) * 12);
  UnionFind sheet_uf(static_cast<size_t>(n) * 12);
  UnionFind mid_uf(static_cast<size_t>(n) * 12);   // m corners of panels
  UnionFind bcn_uf(static_cast<size_t>(n) * 12);   // b corners: cube*12 + f*2 + slot
  UnionFind side_uf(static_cast<size_t>(n) * 24);  // m-b sides: panel*2 + side

  auto b_corner = [](long cube, int f, int sheet_axis) {
    int a0 = face_axis(f) == 0 ? 1 : 0;
    int slot = sheet_axis == a0 ? 0 : 1;
    return cube * 12 + f * 2 + slot;
  };

  for (size_t gi = 0; gi < c.gluings.size(); ++gi) {
    const auto& g = c.gluings[gi];
    int f = g.a.face, gg = g.b.face;
    long ca = g.a.cube, cb = g.b.cube;
    for (int j = 0; j < 4; ++j) {
      int ea = face_boundary_edge(f, j);
      int j2 = g.map.apply_edge(j);
      int eb = face_boundary_edge(gg, j2);
      long pa = panel_id(ca, ea), pb = panel_id(cb, eb);
      across.push_back({pa, pb, side_slot(ea, f), side_slot(eb, gg),
                        static_cast<int>(gi)});
      region_uf.unite(static_cast<size_t>(pa), static_cast<size_t>(pb));
      sheet_uf.unite(static_cast<size_t>(pa), static_cast<size_t>(pb));
      mid_uf.unite(static_cast<size_t>(pa), static_cast<size_t>(pb));
      bcn_uf.unite(static_cast<size_t>(b_corner(ca, f, edge_axis_index(ea))),
                   static_cast<size_t>(b_corner(cb, gg, edge_axis_index(eb))));
      side_uf.unite(static_cast<size_t>(pa * 2 + side_slot(ea, f)),
                    static_cast<size_t>(pb * 2 + side_slot(eb, gg)));
    }
  }
  // In-sheet adjacencies: parallel edges of a common face share the segment
  // from that face's center to the cube center.
  for (long cube = 0; cube < n; ++cube) {
    for (int e = 0; e < 12; ++e) {
      for (int s = 0; s < 2; ++s) {
        int f = faces_of_edge[e][s];
        int e2 = opposite_edge_in_face(f, e);
        sheet_uf.unite(static_cast<size_t>(panel_id(cube, e)),
                       static_cast<size_t>(panel_id(cube, e2)));
      }
    }
  }

  // Regions: walk each fan to produce its boundary word.
  std::vector<int> region_of_panel;
  long n_regions = static_cast<long>(region_uf.compress(region_of_panel));
  d.regions.assign(static_cast<size_t>(n_regions), {});
  // glued partner of each panel side
  std::vector<std::pair<long, int>> partner(static_cast<size_t>(n) * 24,
                                            {-1, -1});
  for (const auto& pg : across) {
    partner[static_cast<size_t>(pg.a * 2 + pg.sa)] = {pg.b, pg.sb};
    partner[static_cast<size_t>(pg.b * 2 + pg.sb)] = {pg.a, pg.sa};
  }
  std::vector<char> panel_done(static_cast<size_t>(n) * 12, 0);
  for (long p0 = 0; p0 < n * 12; ++p0) {
    if (panel_done[static_cast<size_t>(p0)]) continue;
    Region& r = d.regions[static_cast<size_t>(region_of_panel[p0])];
    long p = p0;
    int enter = 0;
    do {
      panel_done[static_cast<size_t>(p)] = 1;
      r.panel_count += 1;
      long cube = p / 12;
      int e = static_cast<int>(p % 12);
      int exit = 1 - enter;
      int f_in = faces_of_edge[e][enter], f_out = faces_of_edge[e][exit];
      for (int f : {f_in, f_out}) {
        auto [eid, end] = edge_of_face[static_cast<size_t>(cube * 6 + f)];
        r.boundary_word.push_back(
            {eid, end, edge_slot_on_face[f][e]});
      }
      auto [np, ns] = partner[static_cast<size_t>(p * 2 + exit)];
      p = np;
      enter = ns;
    } while (!(p == p0 && enter == 0));
    r.chi = 1;
    r.boundary_circles = 1;
    if (r.panel_count != static_cast<long>(r.boundary_word.size()) / 2)
      throw MalformedComplex("region fan traversal out of step");
  }

  // Complement components: one per coarse vertex; a component is a ball iff
  // the corresponding corner link is a sphere (always, under the manifold
  // precondition checked above).
  auto links = vertex_links(q);
  d.complement.assign(static_cast<size_t>(q.coarse_vertices), {});
  for (const auto& L : links) {
    int cv = q.corner_class_of_vclass[static_cast<size_t>(L.vertex_class)];
    if (cv >= 0) d.complement[static_cast<size_t>(cv)].is_ball = L.is_sphere();
  }
  for (long cube = 0; cube < n; ++cube) {
    for (int e = 0; e < 12; ++e) {
      int rid = region_of_panel[static_cast<size_t>(panel_id(cube, e))];
      for (int corner : {cube_edges[e].a, cube_edges[e].b}) {
        int vcl = q.vertex_class_of(static_cast<uint32_t>(cube), corner);
        int cv = q.corner_class_of_vclass[static_cast<size_t>(vcl)];
        d.complement[static_cast<size_t>(cv)].regions.push_back(rid);
      }
    }
  }
  for (auto& comp : d.complement) {
    std::sort(comp.regions.begin(), comp.regions.end());
    comp.regions.erase(std::unique(comp.regions.begin(), comp.regions.end()),
                       comp.regions.end());
  }

  // Abstract surface components with Euler characteristics, from the panel
  // quad complex: per component V - E + F with
  //   V: midpoint classes + face-center sheet classes + 3 center points/cube
  //   E: one in-sheet segment per (cube, sheet, face) + glued m-b side classes
  //   F: panels.
  std::vector<int> comp_of_panel;
  long n_comps = static_cast<long>(sheet_uf.compress(comp_of_panel));
  std::vector<long> V(n_comps, 0), E(n_comps, 0), F(n_comps, 0);
  for (long p = 0; p < n * 12; ++p)
    F[static_cast<size_t>(comp_of_panel[p])] += 1;

  std::vector<char> seen_mid(static_cast<size_t>(n) * 12, 0);
  for (long p = 0; p < n * 12; ++p) {
    size_t root = mid_uf.find(static_cast<size_t>(p));
    if (!seen_mid[root]) {
      seen_mid[root] = 1;
      V[static_cast<size_t>(comp_of_panel[p])] += 1;
    }
  }
  std::vector<char> seen_b(static_cast<size_t>(n) * 12, 0);
  for (long cube = 0; cube < n; ++cube) {
    for (int e = 0; e < 12; ++e) {
      for (int s = 0; s < 2; ++s) {
        int f = faces_of_edge[e][s];
        size_t root = bcn_uf.find(
            static_cast<size_t>(b_corner(cube, f, edge_axis_index(e))));
        if (!seen_b[root]) {
          seen_b[root] = 1;
          V[static_cast<size_t>(comp_of_panel[panel_id(cube, e)])] += 1;
        }
      }
    }
  }
  for (long cube = 0; cube < n; ++cube) {
    for (int ax = 0; ax < 3; ++ax) {
      // center corner of the sheet normal to axis ax: pick any panel in it
      int e = 0;
      while (edge_axis_index(e) != ax) ++e;
      V[static_cast<size_t>(comp_of_panel[panel_id(cube, e)])] += 1;
      E[static_cast<size_t>(comp_of_panel[panel_id(cube, e)])] += 4;
    }
  }
  std::vector<char> seen_side(static_cast<size_t>(n) * 24, 0);
  for (long p = 0; p < n * 12; ++p) {
    for (int s = 0; s < 2; ++s) {
      size_t root = side_uf.find(static_cast<size_t>(p * 2 + s));
      if (!seen_side[root]) {
        seen_side[root] = 1;
        E[static_cast<size_t>(comp_of_panel[p])] += 1;
      }
    }
  }
  d.surface_components.assign(static_cast<size_t>(n_comps), {});
  for (long k = 0; k < n_comps; ++k)
    d.surface_components[static_cast<size_t>(k)].chi = V[static_cast<size_t>(k)] -
                                                       E[static_cast<size_t>(k)] +
                                                       F[static_cast<size_t>(k)];
  return d;
}

FillingStatus filling_status(const DehnSurfaceComplex& d) {
  // Local invariants first.
  std::vector<std::vector<char>> ray_seen(
      static_cast<size_t>(d.n_triple_points));
  for (auto& r : ray_seen) r.assign(6, 0);
  for (const auto& e : d.double_edges) {
    if (e.is_circle) continue;
    for (const auto& end : e.ends) {
      if (end.triple_point < 0 || end.triple_point >= d.n_triple_points ||
          end.ray < 0 || end.ray > 5)
        throw MalformedComplex("double edge endpoint out of range");
      if (ray_seen[static_cast<size_t>(end.triple_point)]
                  [static_cast<size_t>(end.ray)]++)
        throw MalformedComplex("two double edges on one triple point ray");
    }
    std::array<char, 4> hit{};
    for (int j = 0; j < 4; ++j) {
      if (e.strip_map[j] < 0 || e.strip_map[j] > 3)
        throw MalformedComplex("strip map out of range");
      hit[static_cast<size_t>(e.strip_map[j])] = 1;
    }
    for (char h : hit)
      if (!h) throw MalformedComplex("strip map is not a bijection");
  }
  // Every ray of every triple point must carry one of the six germs.
  for (const auto& rays : ray_seen)
    for (char s : rays)
      if (!s) throw MalformedComplex("triple point with fewer than 6 germs");

  // Double circles carry 4 region germs; count boundary-word references when
  // the complex records them at all.
  bool has_words = false;
  for (const auto& r : d.regions) has_words |= !r.boundary_word.empty();
  if (has_words) {
    std::vector<int> refs(d.double_edges.size(), 0);
    for (const auto& r : d.regions)
      for (const auto& g : r.boundary_word) {
        if (g.double_edge < 0 ||
            g.double_edge >= static_cast<int>(d.double_edges.size()))
          throw MalformedComplex("boundary word references unknown edge");
        refs[static_cast<size_t>(g.double_edge)] += 1;
      }
    for (size_t e = 0; e < d.double_edges.size(); ++e) {
      if (d.double_edges[e].is_circle && refs[e] != 4)
        throw MalformedComplex("double circle without exactly 4 region germs");
    }
  }

  FillingStatus st;
  st.triple_points_nonempty = d.n_triple_points > 0;
  st.edges_are_intervals = true;
  for (const auto& e : d.double_edges)
    if (e.is_circle) st.edges_are_intervals = false;
  st.regions_are_discs = true;
  for (const auto& r : d.regions)
    if (!r.is_disc()) st.regions_are_discs = false;
  st.complement_is_balls = !d.complement.empty();
  for (const auto& c : d.complement)
    if (!c.is_ball) st.complement_is_balls = false;
  return st;
}

Cubulation dual_cubulation(const DehnSurfaceComplex& d) {
  FillingStatus st = filling_status(d);
  if (!st.filling()) throw NotFilling(st.first_failing_flag());

  Cubulation c;
  c.n_cubes = static_cast<uint32_t>(d.n_triple_points);
  for (const auto& e : d.double_edges) {
    int diff = (e.strip_map[1] - e.strip_map[0]) & 3;
    SquareSymmetry m;
    if (diff == 1) {
      m = {static_cast<uint8_t>(e.strip_map[0]), false};
    } else if (diff == 3) {
      m = {static_cast<uint8_t>((e.strip_map[0] + 1) & 3), true};
    } else {
      throw MalformedComplex("strip map is not a square symmetry");
    }
    for (int j = 0; j < 4; ++j)
      if (m.apply_edge(j) != e.strip_map[j])
        throw MalformedComplex("strip map is not a square symmetry");
    Gluing g;
    g.a = {static_cast<uint32_t>(e.ends[0].triple_point),
           static_cast<uint8_t>(e.ends[0].ray)};
    g.b = {static_cast<uint32_t>(e.ends[1].triple_point),
           static_cast<uint8_t>(e.ends[1].ray)};
    g.map = m;
    c.gluings.push_back(g);
  }
  c.normalize();
  validate_pairing(c.pairing());
  return c;
}

DehnSurfaceComplex bubble_move(const DehnSurfaceComplex& d, int site) {
  if (site < 0 || site >= static_cast<int>(d.regions.size()))
    throw InvalidSite("site " + std::to_string(site) + " is not a region");
  FillingStatus st = filling_status(d);
  if (!st.quasi_filling())
    throw MalformedComplex("bubble move requires a quasi-filling surface");

  DehnSurfaceComplex out = d;
  int circle = static_cast<int>(out.double_edges.size());
  DoubleEdge de;
  de.is_circle = true;
  out.double_edges.push_back(de);

  // Strip convention on the new circle: 0,1 the two hemispheres, 2 the inner
  // piece of the site, 3 the outer piece.
  Region& inner = out.regions[static_cast<size_t>(site)];
  Region outer = inner;
  inner.chi = 1;
  inner.boundary_circles = 1;
  inner.boundary_word = {{circle, -1, 2}};
  inner.panel_count = 0;
  outer.chi -= 1;
  outer.boundary_circles += 1;
  outer.panel_count = 0;
  outer.boundary_word.push_back({circle, -1, 3});
  int outer_id = static_cast<int>(out.regions.size());
  out.regions.push_back(outer);

  int hemi0 = static_cast<int>(out.regions.size());
  for (int h = 0; h < 2; ++h) {
    Region hemi;
    hemi.chi = 1;
    hemi.boundary_circles = 1;
    hemi.boundary_word = {{circle, -1, h}};
    out.regions.push_back(hemi);
  }

  out.surface_components.push_back({2});

  // The two half-balls inside the new sphere.
  std::vector<int> touching;
  for (size_t k = 0; k < out.complement.size(); ++k) {
    auto& comp = out.complement[k];
    auto it = std::find(comp.regions.begin(), comp.regions.end(), site);
    if (it != comp.regions.end()) {
      comp.regions.erase(it);
      comp.regions.push_back(outer_id);
      touching.push_back(static_cast<int>(k));
    }
  }
  for (int h = 0; h < 2; ++h) {
    if (!touching.empty())
      out.complement[static_cast<size_t>(
                         touching[std::min<size_t>(h, touching.size() - 1)])]
          .regions.push_back(hemi0 + h);
    ComplementComponent half;
    half.is_ball = true;
    half.regions = {site, hemi0 + h};
    out.complement.push_back(half);
  }
  for (auto& comp : out.complement) {
    std::sort(comp.regions.begin(), comp.regions.end());
    comp.regions.erase(std::unique(comp.regions.begin(), comp.regions.end()),
                       comp.regions.end());
  }
  return out;
}

}  // namespace cubecensus
