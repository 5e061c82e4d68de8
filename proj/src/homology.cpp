#include "cubecensus/homology.hpp"

#include "cubecensus/conventions.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/smith.hpp"

namespace cubecensus {

ChainComplex build_chain_complex(const QuotientComplex& q) {
  const auto& sub = subdivision();
  ChainComplex cc;
  cc.n0 = q.n_vertex_classes;
  cc.n1 = q.n_edge_classes;
  cc.n2 = q.n_triangle_classes;
  cc.n3 = q.n_tets;

  cc.d1 = IntegerMatrix(static_cast<size_t>(cc.n0), static_cast<size_t>(cc.n1));
  for (long e = 0; e < cc.n1; ++e) {
    int inst = q.edge_rep[static_cast<size_t>(e)];
    int cube = inst / sub.n_edges;
    int local = inst % sub.n_edges;
    // Local vertex ids are graded by type, smaller id = lower type.
    int a = sub.edge_verts[local][0];
    int b = sub.edge_verts[local][1];
    int ca = q.vertex_class_of(static_cast<uint32_t>(cube), a);
    int cb = q.vertex_class_of(static_cast<uint32_t>(cube), b);
    cc.d1(static_cast<size_t>(cb), static_cast<size_t>(e)) += 1;
    cc.d1(static_cast<size_t>(ca), static_cast<size_t>(e)) -= 1;
  }

  cc.d2 = IntegerMatrix(static_cast<size_t>(cc.n1), static_cast<size_t>(cc.n2));
  for (long t = 0; t < cc.n2; ++t) {
    const auto& inc = q.tri_incidence[static_cast<size_t>(t) * 2];
    int cube = inc.tet / kTetsPerCube;
    const auto& tv = sub.tet_vertices[inc.tet % kTetsPerCube];
    int vs[3];
    int k = 0;
    for (int type = 0; type < 4; ++type)
      if (type != inc.missing) vs[k++] = tv[type];
    long base = static_cast<long>(cube) * sub.n_edges;
    auto ecls = [&](int x, int y) {
      return q.edge_class[static_cast<size_t>(base + sub.edge_index[x][y])];
    };
    cc.d2(static_cast<size_t>(ecls(vs[1], vs[2])), static_cast<size_t>(t)) += 1;
    cc.d2(static_cast<size_t>(ecls(vs[0], vs[2])), static_cast<size_t>(t)) -= 1;
    cc.d2(static_cast<size_t>(ecls(vs[0], vs[1])), static_cast<size_t>(t)) += 1;
  }

  cc.d3 = IntegerMatrix(static_cast<size_t>(cc.n2), static_cast<size_t>(cc.n3));
  for (long tet = 0; tet < cc.n3; ++tet) {
    for (int miss = 0; miss < 4; ++miss) {
      int cls = q.tri_class[static_cast<size_t>(tet * 4 + miss)];
      cc.d3(static_cast<size_t>(cls), static_cast<size_t>(tet)) +=
          (miss % 2 == 0) ? 1 : -1;
    }
  }
  return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
  IntegerMatrix z1 = multiply(cc.d1, cc.d2);
  IntegerMatrix z2 = multiply(cc.d2, cc.d3);
  for (size_t i = 0; i < z1.rows(); ++i)
    for (size_t j = 0; j < z1.cols(); ++j)
      if (z1(i, j) != 0) return false;
  for (size_t i = 0; i < z2.rows(); ++i)
    for (size_t j = 0; j < z2.cols(); ++j)
      if (z2(i, j) != 0) return false;
  return true;
}

std::array<AbelianGroup, 4> homology_of_complex(const ChainComplex& cc) {
  auto s1 = smith_normal_form(cc.d1);
  auto s2 = smith_normal_form(cc.d2);
  auto s3 = smith_normal_form(cc.d3);
  long r1 = static_cast<long>(rank(s1));
  long r2 = static_cast<long>(rank(s2));
  long r3 = static_cast<long>(rank(s3));

  auto group = [](long free_rank, const std::vector<Integer>& factors) {
    AbelianGroup g;
    g.free_rank = free_rank;
    for (const auto& d : factors)
      if (d > 1) g.torsion.push_back(d);
    return g;
  };
  std::array<AbelianGroup, 4> h;
  h[0] = group(cc.n0 - r1, s1.invariant_factors);
  h[1] = group(cc.n1 - r1 - r2, s2.invariant_factors);
  h[2] = group(cc.n2 - r2 - r3, s3.invariant_factors);
  h[3] = group(cc.n3 - r3, {});
  return h;
}

std::array<AbelianGroup, 4> homology(const QuotientComplex& q) {
  auto cert = is_closed_3_manifold(q);
  if (!cert.is_manifold)
    throw NotAManifold("homology requires a closed 3-manifold: " +
                       cert.describe());
  return homology_of_complex(build_chain_complex(q));
}

}  // namespace cubecensus
