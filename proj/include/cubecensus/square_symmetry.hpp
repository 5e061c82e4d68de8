#pragma once

#include <cstdint>

namespace cubecensus {

// Symmetry of a square acting on corner slots 0..3:
//   slot p  ->  rotation + p        (reflected == false)
//   slot p  ->  rotation - p        (reflected == true)
// The 8 values form the dihedral group of the square; index 0 is the identity.
struct SquareSymmetry {
  uint8_t rotation = 0;  // quarter-turns, 0..3
  bool reflected = false;

  int apply(int slot) const {
    return reflected ? (rotation - slot) & 3 : (rotation + slot) & 3;
  }

  // Action on boundary edges: edge j joins slots j and j+1.
  int apply_edge(int j) const {
    return reflected ? (rotation - 1 - j) & 3 : (rotation + j) & 3;
  }

  uint8_t index() const { return rotation | (reflected ? 4 : 0); }
  static SquareSymmetry from_index(int i) {
    return {static_cast<uint8_t>(i & 3), (i & 4) != 0};
  }

  bool operator==(const SquareSymmetry& o) const {
    return rotation == o.rotation && reflected == o.reflected;
  }
  bool operator!=(const SquareSymmetry& o) const { return !(*this == o); }
};

// Composition a∘b: apply b first, then a.
inline SquareSymmetry compose_symmetry(SquareSymmetry a, SquareSymmetry b) {
  int sa = a.reflected ? -1 : 1;
  return {static_cast<uint8_t>((a.rotation + sa * b.rotation) & 3),
          a.reflected != b.reflected};
}

inline SquareSymmetry invert_symmetry(SquareSymmetry a) {
  int s = a.reflected ? 1 : -1;
  return {static_cast<uint8_t>((s * a.rotation) & 3), a.reflected};
}

inline constexpr int kSquareSymmetryCount = 8;

}  // namespace cubecensus
