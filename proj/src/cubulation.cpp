#include "cubecensus/cubulation.hpp"

#include <algorithm>
#include <cctype>

#include "cubecensus/errors.hpp"

namespace cubecensus {

void validate_pairing(const FacePairing& p) {
  std::vector<int> seen(static_cast<size_t>(p.n_cubes) * 6, 0);
  if (p.pairs.size() != static_cast<size_t>(p.n_cubes) * 3)
    throw MalformedPairing("pairing must contain exactly 3n pairs");
  for (const auto& [a, b] : p.pairs) {
    for (const FaceLabel& f : {a, b}) {
      if (f.cube >= p.n_cubes || f.face > 5)
        throw MalformedPairing("face label out of range");
      if (seen[f.cube * 6 + f.face]++)
        throw MalformedPairing("face appears in more than one pair");
    }
    if (a == b) throw MalformedPairing("pair contains a face twice");
  }
}

FacePairing Cubulation::pairing() const {
  FacePairing p;
  p.n_cubes = n_cubes;
  p.pairs.reserve(gluings.size());
  for (const auto& g : gluings) p.pairs.emplace_back(g.a, g.b);
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

void Cubulation::normalize() {
  for (auto& g : gluings) {
    if (g.b < g.a) {
      std::swap(g.a, g.b);
      g.map = invert_symmetry(g.map);
    }
  }
  std::sort(gluings.begin(), gluings.end());
}

std::string to_text(const Cubulation& c) {
  std::string out = "n=" + std::to_string(c.n_cubes);
  for (const auto& g : c.gluings) {
    out += "; c" + std::to_string(g.a.cube) + "." + std::to_string(g.a.face) +
           "~c" + std::to_string(g.b.cube) + "." + std::to_string(g.b.face) +
           ":r" + std::to_string(g.map.rotation);
    if (g.map.reflected) out += "m";
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, i);
    ++i;
  }
  uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digit", i);
    uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      if (v > 0xffffffffull) throw ParseError("number too large", i);
      ++i;
    }
    return v;
  }
};

FaceLabel parse_face(Cursor& c) {
  c.expect('c', "'c'");
  FaceLabel f;
  f.cube = static_cast<uint32_t>(c.number());
  c.expect('.', "'.'");
  size_t at = c.i;
  uint64_t face = c.number();
  if (face > 5) throw ParseError("face id must be 0..5", at);
  f.face = static_cast<uint8_t>(face);
  return f;
}

}  // namespace

Cubulation parse_cubulation(const std::string& text) {
  Cursor c{text};
  Cubulation out;
  c.expect('n', "'n'");
  c.expect('=', "'='");
  out.n_cubes = static_cast<uint32_t>(c.number());
  while (!c.done()) {
    c.expect(';', "';'");
    c.expect(' ', "' '");
    Gluing g;
    g.a = parse_face(c);
    c.expect('~', "'~'");
    g.b = parse_face(c);
    c.expect(':', "':'");
    c.expect('r', "'r'");
    size_t at = c.i;
    uint64_t rot = c.number();
    if (rot > 3) throw ParseError("rotation must be 0..3", at);
    g.map.rotation = static_cast<uint8_t>(rot);
    if (c.peek() == 'm') {
      g.map.reflected = true;
      ++c.i;
    }
    out.gluings.push_back(g);
  }
  out.normalize();
  FacePairing p = out.pairing();
  try {
    validate_pairing(p);
  } catch (const MalformedPairing& e) {
    throw ParseError(e.what(), text.size());
  }
  return out;
}

}  // namespace cubecensus
