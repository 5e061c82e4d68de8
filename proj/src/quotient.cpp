#include "cubecensus/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

#include "cubecensus/conventions.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/union_find.hpp"

namespace cubecensus {

namespace {

// Cube edge carried by flag (f, p, d).
int flag_cube_edge(int f, int p, int d) {
  const auto& sub = subdivision();
  return sub.tet_vertices[flag_id(f, p, d)][kMidpoint] - kLocalMid0;
}

}  // namespace

int QuotientComplex::tet_vertex_class(int tet, int type) const {
  const auto& sub = subdivision();
  int cube = tet / kTetsPerCube;
  int local = sub.tet_vertices[tet % kTetsPerCube][type];
  return vertex_class_of(static_cast<uint32_t>(cube), local);
}

QuotientComplex build_quotient(const SubdividedComplex& s, const Cubulation& c) {
  const auto& sub = subdivision();
  const long n = s.n_cubes;
  QuotientComplex q;
  q.n_cubes = s.n_cubes;
  q.n_tets = n * kTetsPerCube;

  UnionFind vuf(static_cast<size_t>(n) * kVertsPerCube);
  UnionFind euf(static_cast<size_t>(n) * sub.n_edges);
  UnionFind tuf(static_cast<size_t>(n) * kTetsPerCube * 4);

  // Interior triangle sharings within each cube.
  for (long cube = 0; cube < n; ++cube) {
    long t0 = cube * kTetsPerCube;
    for (int t = 0; t < kTetsPerCube; ++t)
      for (int miss = 0; miss < 3; ++miss)
        tuf.unite(static_cast<size_t>((t0 + t) * 4 + miss),
                  static_cast<size_t>((t0 + sub.interior_neighbor[t][miss]) * 4 +
                                      miss));
  }

  // Boundary triangle pairings induced by the face gluings.
  for (const auto& g : c.gluings) {
    int f = g.a.face, gg = g.b.face;
    long ca = g.a.cube, cb = g.b.cube;
    bool m = g.map.reflected;
    for (int p = 0; p < 4; ++p) {
      int qslot = g.map.apply(p);
      for (int d = 0; d < 2; ++d) {
        int d2 = d ^ (m ? 1 : 0);
        int t1 = flag_id(f, p, d);
        int t2 = flag_id(gg, qslot, d2);
        long g1 = ca * kTetsPerCube + t1;
        long g2 = cb * kTetsPerCube + t2;
        tuf.unite(static_cast<size_t>(g1 * 4 + kCenter),
                  static_cast<size_t>(g2 * 4 + kCenter));

        int v1 = face_corners[f][p];
        int v2 = face_corners[gg][qslot];
        int e1 = flag_cube_edge(f, p, d);
        int e2 = flag_cube_edge(gg, qslot, d2);
        long va = ca * kVertsPerCube, vb = cb * kVertsPerCube;
        vuf.unite(static_cast<size_t>(va + v1), static_cast<size_t>(vb + v2));
        vuf.unite(static_cast<size_t>(va + kLocalMid0 + e1),
                  static_cast<size_t>(vb + kLocalMid0 + e2));
        vuf.unite(static_cast<size_t>(va + kLocalFaceCenter0 + f),
                  static_cast<size_t>(vb + kLocalFaceCenter0 + gg));

        long ea = ca * sub.n_edges, eb = cb * sub.n_edges;
        auto le = [&sub](int x, int y) { return sub.edge_index[x][y]; };
        euf.unite(static_cast<size_t>(ea + le(v1, kLocalMid0 + e1)),
                  static_cast<size_t>(eb + le(v2, kLocalMid0 + e2)));
        euf.unite(static_cast<size_t>(ea + le(v1, kLocalFaceCenter0 + f)),
                  static_cast<size_t>(eb + le(v2, kLocalFaceCenter0 + gg)));
        euf.unite(
            static_cast<size_t>(ea + le(kLocalMid0 + e1, kLocalFaceCenter0 + f)),
            static_cast<size_t>(eb +
                                le(kLocalMid0 + e2, kLocalFaceCenter0 + gg)));
      }
    }
  }

  q.n_vertex_classes = static_cast<long>(vuf.compress(q.vertex_class));
  q.n_edge_classes = static_cast<long>(euf.compress(q.edge_class));
  q.n_triangle_classes = static_cast<long>(tuf.compress(q.tri_class));

  q.edge_rep.assign(static_cast<size_t>(q.n_edge_classes), -1);
  for (size_t i = 0; i < q.edge_class.size(); ++i)
    if (q.edge_rep[static_cast<size_t>(q.edge_class[i])] < 0)
      q.edge_rep[static_cast<size_t>(q.edge_class[i])] = static_cast<int>(i);

  q.tri_incidence.assign(static_cast<size_t>(q.n_triangle_classes) * 2, {});
  q.tri_incidence_count.assign(static_cast<size_t>(q.n_triangle_classes), 0);
  for (long tet = 0; tet < q.n_tets; ++tet) {
    for (int miss = 0; miss < 4; ++miss) {
      int cls = q.tri_class[static_cast<size_t>(tet * 4 + miss)];
      int& cnt = q.tri_incidence_count[static_cast<size_t>(cls)];
      if (cnt < 2)
        q.tri_incidence[static_cast<size_t>(cls) * 2 + cnt] = {
            static_cast<int>(tet), miss};
      ++cnt;
    }
  }

  q.corner_class_of_vclass.assign(static_cast<size_t>(q.n_vertex_classes), -1);
  q.edge_class_of_vclass.assign(static_cast<size_t>(q.n_vertex_classes), -1);
  q.face_class_of_vclass.assign(static_cast<size_t>(q.n_vertex_classes), -1);
  long v0 = 0, e0 = 0, f0 = 0;
  for (long cube = 0; cube < n; ++cube) {
    for (int v = 0; v < 8; ++v) {
      int cls = q.vertex_class_of(static_cast<uint32_t>(cube), v);
      if (q.corner_class_of_vclass[static_cast<size_t>(cls)] < 0)
        q.corner_class_of_vclass[static_cast<size_t>(cls)] =
            static_cast<int>(v0++);
    }
    for (int e = 0; e < 12; ++e) {
      int cls = q.vertex_class_of(static_cast<uint32_t>(cube), kLocalMid0 + e);
      if (q.edge_class_of_vclass[static_cast<size_t>(cls)] < 0)
        q.edge_class_of_vclass[static_cast<size_t>(cls)] =
            static_cast<int>(e0++);
    }
    for (int f = 0; f < 6; ++f) {
      int cls = q.vertex_class_of(static_cast<uint32_t>(cube),
                                  kLocalFaceCenter0 + f);
      if (q.face_class_of_vclass[static_cast<size_t>(cls)] < 0)
        q.face_class_of_vclass[static_cast<size_t>(cls)] =
            static_cast<int>(f0++);
    }
  }
  q.coarse_vertices = v0;
  q.coarse_edges = e0;
  q.coarse_faces = f0;
  q.coarse_cells = n;
  return q;
}

PseudomanifoldCheck check_pseudomanifold(const QuotientComplex& q) {
  PseudomanifoldCheck out;
  for (long cls = 0; cls < q.n_triangle_classes; ++cls) {
    if (q.tri_incidence_count[static_cast<size_t>(cls)] != 2) {
      out.ok = false;
      out.bad_triangle_classes.push_back(static_cast<int>(cls));
    }
  }
  return out;
}

namespace {

// Germ slot of the edge from the type-tau vertex toward the type-sig vertex.
inline int germ_slot(int tau, int sig) {
  return tau * 3 + (sig > tau ? sig - 1 : sig);
}

}  // namespace

std::vector<LinkSurface> vertex_links(const QuotientComplex& q) {
  auto pm = check_pseudomanifold(q);
  if (!pm.ok)
    throw NotPseudomanifold("triangle class without exactly 2 incidences");

  const auto& sub = subdivision();
  const long n_inc = q.n_tets * 4;
  UnionFind germ(static_cast<size_t>(q.n_tets) * 12);
  UnionFind comp(static_cast<size_t>(n_inc));

  for (long cls = 0; cls < q.n_triangle_classes; ++cls) {
    const auto& i1 = q.tri_incidence[static_cast<size_t>(cls) * 2];
    const auto& i2 = q.tri_incidence[static_cast<size_t>(cls) * 2 + 1];
    // Identifications preserve vertex types, so both instances miss the same
    // type and match the remaining three type-wise.
    for (int tau = 0; tau < 4; ++tau) {
      if (tau == i1.missing) continue;
      comp.unite(static_cast<size_t>(i1.tet * 4 + tau),
                 static_cast<size_t>(i2.tet * 4 + tau));
      for (int sig = 0; sig < 4; ++sig) {
        if (sig == tau || sig == i1.missing) continue;
        germ.unite(static_cast<size_t>(i1.tet * 12 + germ_slot(tau, sig)),
                   static_cast<size_t>(i2.tet * 12 + germ_slot(tau, sig)));
      }
    }
  }

  std::vector<LinkSurface> links(static_cast<size_t>(q.n_vertex_classes));
  // Component index per (tet, tau) incidence, local to its vertex class.
  std::vector<std::vector<size_t>> comp_roots(
      static_cast<size_t>(q.n_vertex_classes));
  std::vector<std::unordered_set<size_t>> germ_seen(
      static_cast<size_t>(q.n_vertex_classes));

  for (long tet = 0; tet < q.n_tets; ++tet) {
    for (int tau = 0; tau < 4; ++tau) {
      int vcls = q.tet_vertex_class(static_cast<int>(tet), tau);
      LinkSurface& L = links[static_cast<size_t>(vcls)];
      if (L.vertex_class < 0) {
        L.vertex_class = vcls;
        int cube = static_cast<int>(tet) / kTetsPerCube;
        L.sample_cube = cube;
        L.sample_local = sub.tet_vertices[tet % kTetsPerCube][tau];
      }
      size_t root = comp.find(static_cast<size_t>(tet * 4 + tau));
      auto& roots = comp_roots[static_cast<size_t>(vcls)];
      size_t ci;
      auto it = std::find(roots.begin(), roots.end(), root);
      if (it == roots.end()) {
        ci = roots.size();
        roots.push_back(root);
        L.components.push_back({});
      } else {
        ci = static_cast<size_t>(it - roots.begin());
      }
      LinkComponent& K = L.components[ci];
      K.triangles += 1;
      for (int sig = 0; sig < 4; ++sig) {
        if (sig == tau) continue;
        size_t g = germ.find(static_cast<size_t>(tet * 12 + germ_slot(tau, sig)));
        if (germ_seen[static_cast<size_t>(vcls)].insert(g).second)
          K.vertices += 1;
      }
    }
  }
  for (auto& L : links) {
    for (auto& K : L.components) K.edges = K.triangles * 3 / 2;
  }
  return links;
}

ManifoldCertificate is_closed_3_manifold(const QuotientComplex& q) {
  ManifoldCertificate cert;
  if (q.n_tets == 0) return cert;  // the empty complex is not a 3-manifold
  auto pm = check_pseudomanifold(q);
  cert.pseudomanifold = pm.ok;
  cert.bad_triangle_classes = pm.bad_triangle_classes;
  if (!pm.ok) {
    cert.is_manifold = false;
    return cert;
  }
  for (const auto& L : vertex_links(q)) {
    if (!L.is_sphere()) cert.bad_vertex_classes.push_back(L.vertex_class);
  }
  cert.is_manifold = cert.bad_vertex_classes.empty();
  return cert;
}

std::string ManifoldCertificate::describe() const {
  if (is_manifold) return "closed 3-manifold";
  std::string s;
  if (!pseudomanifold) {
    s = "not a pseudomanifold; triangle classes:";
    for (int t : bad_triangle_classes) s += " " + std::to_string(t);
    return s;
  }
  s = "vertex links failing the sphere condition:";
  for (int v : bad_vertex_classes) s += " " + std::to_string(v);
  return s;
}

bool is_orientable(const QuotientComplex& q) {
  auto cert = is_closed_3_manifold(q);
  if (!cert.is_manifold)
    throw NotAManifold("orientability requires a closed 3-manifold: " +
                       cert.describe());

  // Type-preserving identifications force opposite orientations on the two
  // tetrahedra sharing any triangle; orientability is 2-colorability of the
  // tetrahedron adjacency graph.
  std::vector<int> color(static_cast<size_t>(q.n_tets), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(q.n_tets));
  for (long cls = 0; cls < q.n_triangle_classes; ++cls) {
    int a = q.tri_incidence[static_cast<size_t>(cls) * 2].tet;
    int b = q.tri_incidence[static_cast<size_t>(cls) * 2 + 1].tet;
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (long s = 0; s < q.n_tets; ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    std::deque<long> queue{s};
    while (!queue.empty()) {
      long x = queue.front();
      queue.pop_front();
      for (int y : adj[static_cast<size_t>(x)]) {
        if (color[static_cast<size_t>(y)] < 0) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          queue.push_back(y);
        } else if (color[static_cast<size_t>(y)] ==
                   color[static_cast<size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string vertex_class_name(const QuotientComplex& q, int vclass) {
  for (long cube = 0; cube < q.n_cubes; ++cube) {
    for (int local = 0; local < kVertsPerCube; ++local) {
      if (q.vertex_class_of(static_cast<uint32_t>(cube), local) != vclass)
        continue;
      std::string c = "c" + std::to_string(cube) + ".";
      if (local < kLocalMid0) return c + "corner(" + std::to_string(local) + ")";
      if (local < kLocalFaceCenter0)
        return c + "midpoint(e" + std::to_string(local - kLocalMid0) + ")";
      if (local < kLocalCenter)
        return c + "facecenter(" + std::to_string(local - kLocalFaceCenter0) +
               ")";
      return c + "center";
    }
  }
  return "v" + std::to_string(vclass);
}

}  // namespace cubecensus
