#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubecensus/square_symmetry.hpp"

namespace cubecensus {

struct FaceLabel {
  uint32_t cube = 0;
  uint8_t face = 0;  // 0..5

  bool operator==(const FaceLabel& o) const {
    return cube == o.cube && face == o.face;
  }
  bool operator!=(const FaceLabel& o) const { return !(*this == o); }
  bool operator<(const FaceLabel& o) const {
    return std::tie(cube, face) < std::tie(o.cube, o.face);
  }
};

// One identified pair of faces. The stored representative always has a < b;
// map sends corner slots of a to corner slots of b.
struct Gluing {
  FaceLabel a, b;
  SquareSymmetry map;

  bool operator==(const Gluing& o) const {
    return a == o.a && b == o.b && map == o.map;
  }
  bool operator<(const Gluing& o) const {
    return std::tie(a, b, map.rotation, map.reflected) <
           std::tie(o.a, o.b, o.map.rotation, o.map.reflected);
  }
};

// A perfect matching of the 6n faces of n cubes.
struct FacePairing {
  uint32_t n_cubes = 0;
  std::vector<std::pair<FaceLabel, FaceLabel>> pairs;  // sorted, smaller first

  bool operator==(const FacePairing& o) const {
    return n_cubes == o.n_cubes && pairs == o.pairs;
  }
  bool operator<(const FacePairing& o) const { return pairs < o.pairs; }
};

// Throws MalformedPairing unless every face of every cube appears exactly once.
void validate_pairing(const FacePairing& p);

struct Cubulation {
  uint32_t n_cubes = 0;
  std::vector<Gluing> gluings;  // sorted by smaller face label

  FacePairing pairing() const;
  // Normalizes pair orientation (a < b, map inverted if swapped) and sorts.
  void normalize();

  bool operator==(const Cubulation& o) const {
    return n_cubes == o.n_cubes && gluings == o.gluings;
  }
};

// Text format, one cubulation per line:
//   n=<k>; c<i>.<f>~c<j>.<g>:r<t>[m]; ...
// where t is the quarter-turn count 0..3 and a trailing 'm' marks reflection.
// Printing and parsing round-trip bit-exactly.
std::string to_text(const Cubulation& c);
Cubulation parse_cubulation(const std::string& text);  // throws ParseError

}  // namespace cubecensus
