#include "cubecensus/signature.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "cubecensus/conventions.hpp"
#include "cubecensus/enumeration.hpp"
#include "cubecensus/errors.hpp"

namespace cubecensus {

namespace {

constexpr uint8_t kFormatVersion = 1;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 24));
}

uint32_t get_u32(const std::vector<uint8_t>& b, size_t& i) {
  if (i + 4 > b.size()) throw ParseError("signature truncated", i);
  uint32_t v = static_cast<uint32_t>(b[i]) |
               static_cast<uint32_t>(b[i + 1]) << 8 |
               static_cast<uint32_t>(b[i + 2]) << 16 |
               static_cast<uint32_t>(b[i + 3]) << 24;
  i += 4;
  return v;
}

std::vector<uint8_t> serialize(const Cubulation& c) {
  std::vector<uint8_t> out;
  out.push_back(kFormatVersion);
  put_u32(out, c.n_cubes);
  for (const auto& g : c.gluings) {
    put_u32(out, g.a.cube);
    out.push_back(g.a.face);
    put_u32(out, g.b.cube);
    out.push_back(g.b.face);
    out.push_back(g.map.index());
  }
  return out;
}

// Gluing lookup per (cube, face): partner face and the map from this side.
struct GlueTable {
  std::vector<FaceLabel> partner;     // indexed cube*6+face
  std::vector<SquareSymmetry> map;

  explicit GlueTable(const Cubulation& c)
      : partner(static_cast<size_t>(c.n_cubes) * 6),
        map(static_cast<size_t>(c.n_cubes) * 6) {
    for (const auto& g : c.gluings) {
      partner[g.a.cube * 6 + g.a.face] = g.b;
      map[g.a.cube * 6 + g.a.face] = g.map;
      partner[g.b.cube * 6 + g.b.face] = g.a;
      map[g.b.cube * 6 + g.b.face] = invert_symmetry(g.map);
    }
  }
};

// Breadth-first relabeling from a chosen start cube and start symmetry: each
// newly discovered cube receives the unique symmetry normalizing its entering
// gluing to (face 0 of the new cube, identity map). Unreached cubes keep
// their order with the identity symmetry, so disconnected inputs stay
// deterministic (though only connected ones get a canonical minimum).
std::vector<uint8_t> bfs_bytes(const Cubulation& c, const GlueTable& glue,
                               uint32_t start, int start_sym) {
  const auto& sym = cube_symmetries();
  const uint32_t n = c.n_cubes;
  std::vector<int> new_index(n, -1);
  std::vector<int> sym_of(n, 0);
  std::vector<uint32_t> order;
  order.reserve(n);

  new_index[start] = 0;
  sym_of[start] = start_sym;
  order.push_back(start);

  for (size_t k = 0; k < order.size(); ++k) {
    uint32_t old_cube = order[k];
    int h = sym_of[old_cube];
    int hinv = sym.inverse[h];
    for (int f_new = 0; f_new < 6; ++f_new) {
      int f_old = sym.face_map[hinv][f_new];
      FaceLabel other = glue.partner[old_cube * 6 + f_old];
      if (new_index[other.cube] >= 0) continue;
      SquareSymmetry phi = glue.map[old_cube * 6 + f_old];
      SquareSymmetry sa =
          SquareSymmetry::from_index(sym.slot_act[h][f_old]);
      // Want the entering gluing to become the identity onto face 0:
      // sigma_{h2, g} = sigma_{h, f} ∘ phi^{-1}.
      SquareSymmetry target = compose_symmetry(sa, invert_symmetry(phi));
      int h2 = sym.entry_sym[other.face][target.index()];
      new_index[other.cube] = static_cast<int>(order.size());
      sym_of[other.cube] = h2;
      order.push_back(other.cube);
    }
  }
  for (uint32_t cube = 0; cube < n; ++cube) {
    if (new_index[cube] < 0) {
      new_index[cube] = static_cast<int>(order.size());
      order.push_back(cube);
    }
  }

  std::vector<int> perm(new_index.begin(), new_index.end());
  Cubulation relabeled = relabel(c, perm, sym_of);
  return serialize(relabeled);
}

}  // namespace

Signature isomorphism_signature(const Cubulation& c) {
  validate_pairing(c.pairing());
  GlueTable glue(c);
  Signature best;
  for (uint32_t start = 0; start < c.n_cubes; ++start) {
    for (int h = 0; h < 48; ++h) {
      auto bytes = bfs_bytes(c, glue, start, h);
      if (best.bytes.empty() || bytes < best.bytes) best.bytes = bytes;
    }
  }
  if (best.bytes.empty()) best.bytes = serialize(c);  // n = 0
  return best;
}

Cubulation signature_to_cubulation(const Signature& s) {
  size_t i = 0;
  const auto& b = s.bytes;
  if (b.empty() || b[0] != kFormatVersion)
    throw ParseError("unknown signature version", 0);
  i = 1;
  Cubulation c;
  c.n_cubes = get_u32(b, i);
  while (i < b.size()) {
    Gluing g;
    g.a.cube = get_u32(b, i);
    if (i >= b.size()) throw ParseError("signature truncated", i);
    g.a.face = b[i++];
    g.b.cube = get_u32(b, i);
    if (i + 1 >= b.size()) throw ParseError("signature truncated", i);
    g.b.face = b[i++];
    g.map = SquareSymmetry::from_index(b[i++]);
    c.gluings.push_back(g);
  }
  c.normalize();
  return c;
}

std::string Signature::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

Signature Signature::from_hex(const std::string& s) {
  if (s.size() % 2) throw ParseError("odd-length hex signature", s.size());
  auto nib = [&](size_t i) -> int {
    char c = s[i];
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError("invalid hex digit", i);
  };
  Signature out;
  out.bytes.reserve(s.size() / 2);
  for (size_t i = 0; i < s.size(); i += 2)
    out.bytes.push_back(static_cast<uint8_t>(nib(i) << 4 | nib(i + 1)));
  return out;
}

std::vector<CensusClass> dedupe(const std::vector<Cubulation>& candidates) {
  std::map<Signature, CensusClass> classes;
  for (const auto& c : candidates) {
    Signature sig = isomorphism_signature(c);
    auto it = classes.find(sig);
    if (it == classes.end()) {
      CensusClass cls;
      cls.representative = signature_to_cubulation(sig);
      cls.signature = std::move(sig);
      cls.multiplicity = 1;
      classes.emplace(cls.signature, std::move(cls));
    } else {
      ++it->second.multiplicity;
    }
  }
  std::vector<CensusClass> out;
  out.reserve(classes.size());
  for (auto& [sig, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace cubecensus
