#pragma once

#include "cubecensus/cubulation.hpp"
#include "cubecensus/quotient.hpp"

namespace cubecensus::testing {

// Opposite faces glued by translations: the 3-torus.
inline Cubulation three_torus() {
  return parse_cubulation("n=1; c0.0~c0.1:r0m; c0.2~c0.3:r0m; c0.4~c0.5:r0m");
}

// Opposite faces glued through the center: projective space.
inline Cubulation antipodal() {
  return parse_cubulation("n=1; c0.0~c0.1:r2m; c0.2~c0.3:r2m; c0.4~c0.5:r2m");
}

// One pair glued through a reflection: the orientation-reversing product
// of a Klein bottle with a circle.
inline Cubulation klein_times_circle() {
  return parse_cubulation("n=1; c0.0~c0.1:r3; c0.2~c0.3:r0m; c0.4~c0.5:r0m");
}

// Two-cube cubulation of the 3-torus (the one-cube torus doubled along x).
inline Cubulation three_torus_two_cubes() {
  return parse_cubulation(
      "n=2; c0.0~c1.1:r0m; c0.1~c1.0:r0m; c0.2~c0.3:r0m; c0.4~c0.5:r0m; "
      "c1.2~c1.3:r0m; c1.4~c1.5:r0m");
}

inline QuotientComplex quotient_of(const Cubulation& c) {
  return build_quotient(subdivide(c), c);
}

}  // namespace cubecensus::testing
