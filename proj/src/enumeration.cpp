#include "cubecensus/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubecensus/conventions.hpp"
#include "cubecensus/errors.hpp"

namespace cubecensus {

namespace {

FaceLabel nth_face(uint32_t i) {
  return {i / 6, static_cast<uint8_t>(i % 6)};
}

void pairings_rec(std::vector<uint32_t>& remaining, FacePairing& acc,
                  std::vector<FacePairing>& out) {
  if (remaining.empty()) {
    out.push_back(acc);
    return;
  }
  uint32_t a = remaining.front();
  for (size_t k = 1; k < remaining.size(); ++k) {
    uint32_t b = remaining[k];
    std::vector<uint32_t> rest;
    rest.reserve(remaining.size() - 2);
    for (size_t j = 1; j < remaining.size(); ++j)
      if (j != k) rest.push_back(remaining[j]);
    acc.pairs.emplace_back(nth_face(a), nth_face(b));
    pairings_rec(rest, acc, out);
    acc.pairs.pop_back();
  }
}

}  // namespace

std::vector<FacePairing> enumerate_pairings(uint32_t n_cubes) {
  std::vector<uint32_t> faces(static_cast<size_t>(n_cubes) * 6);
  for (size_t i = 0; i < faces.size(); ++i) faces[i] = static_cast<uint32_t>(i);
  std::vector<FacePairing> out;
  FacePairing acc;
  acc.n_cubes = n_cubes;
  pairings_rec(faces, acc, out);
  for (auto& p : out) p.n_cubes = n_cubes;
  return out;
}

PairingClasses pairing_symmetry_classes(const std::vector<FacePairing>& ps) {
  const auto& sym = cube_symmetries();
  auto key = [](const FacePairing& p) {
    auto pairs = p.pairs;
    for (auto& pr : pairs)
      if (pr.second < pr.first) std::swap(pr.first, pr.second);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  };

  PairingClasses out;
  out.class_of.assign(ps.size(), -1);
  std::map<std::vector<std::pair<FaceLabel, FaceLabel>>, int> class_by_key;

  for (size_t i = 0; i < ps.size(); ++i) {
    validate_pairing(ps[i]);
    if (ps[i].n_cubes != 1)
      throw MalformedPairing("symmetry classes are defined for one cube");
    auto k = key(ps[i]);
    auto it = class_by_key.find(k);
    if (it != class_by_key.end()) {
      out.class_of[i] = it->second;
      out.members[static_cast<size_t>(it->second)].push_back(i);
      continue;
    }
    int cls = static_cast<int>(out.representatives.size());
    FacePairing rep = ps[i];
    auto best = k;
    for (int h = 0; h < 48; ++h) {
      FacePairing q;
      q.n_cubes = 1;
      for (const auto& [a, b] : ps[i].pairs)
        q.pairs.emplace_back(FaceLabel{0, sym.face_map[h][a.face]},
                             FaceLabel{0, sym.face_map[h][b.face]});
      auto qk = key(q);
      class_by_key.emplace(qk, cls);
      if (qk < best) {
        best = qk;
        rep = q;
      }
    }
    rep.pairs = best;
    out.representatives.push_back(rep);
    out.members.push_back({i});
    out.class_of[i] = cls;
  }
  return out;
}

uint64_t gluing_count(const FacePairing& p, bool transversal) {
  uint64_t per = transversal ? 4 : 8;
  uint64_t n = 1;
  for (size_t i = 0; i < p.pairs.size(); ++i) n *= per;
  return n;
}

Cubulation gluing_at(const FacePairing& p, uint64_t code, bool transversal) {
  Cubulation c;
  c.n_cubes = p.n_cubes;
  uint64_t per = transversal ? 4 : 8;
  for (const auto& [a, b] : p.pairs) {
    int digit = static_cast<int>(code % per);
    code /= per;
    SquareSymmetry m = transversal
                           ? SquareSymmetry{static_cast<uint8_t>(digit), true}
                           : SquareSymmetry::from_index(digit);
    c.gluings.push_back({a, b, m});
  }
  c.normalize();
  return c;
}

std::vector<Cubulation> enumerate_gluings(const FacePairing& p,
                                          bool transversal) {
  validate_pairing(p);
  uint64_t n = gluing_count(p, transversal);
  std::vector<Cubulation> out;
  out.reserve(n);
  for (uint64_t code = 0; code < n; ++code)
    out.push_back(gluing_at(p, code, transversal));
  return out;
}

Cubulation relabel(const Cubulation& c, const std::vector<int>& cube_perm,
                   const std::vector<int>& sym_of) {
  const auto& sym = cube_symmetries();
  Cubulation out;
  out.n_cubes = c.n_cubes;
  for (const auto& g : c.gluings) {
    int ha = sym_of[g.a.cube];
    int hb = sym_of[g.b.cube];
    FaceLabel a2{static_cast<uint32_t>(cube_perm[g.a.cube]),
                 sym.face_map[ha][g.a.face]};
    FaceLabel b2{static_cast<uint32_t>(cube_perm[g.b.cube]),
                 sym.face_map[hb][g.b.face]};
    SquareSymmetry sa = SquareSymmetry::from_index(sym.slot_act[ha][g.a.face]);
    SquareSymmetry sb = SquareSymmetry::from_index(sym.slot_act[hb][g.b.face]);
    SquareSymmetry m =
        compose_symmetry(sb, compose_symmetry(g.map, invert_symmetry(sa)));
    out.gluings.push_back({a2, b2, m});
  }
  out.normalize();
  return out;
}

Cubulation relabel_one_cube(const Cubulation& c, int sym) {
  return relabel(c, {0}, {sym});
}

}  // namespace cubecensus
