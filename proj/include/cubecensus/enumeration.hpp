#pragma once

#include <cstdint>
#include <vector>

#include "cubecensus/cubulation.hpp"

namespace cubecensus {

// All perfect matchings of the 6n faces, each exactly once, in the
// deterministic order produced by pairing the smallest unmatched face with
// every larger face in turn. n = 0 yields the single empty pairing; n = 1
// yields 15 pairings.
std::vector<FacePairing> enumerate_pairings(uint32_t n_cubes);

struct PairingClasses {
  std::vector<int> class_of;                 // per input index
  std::vector<FacePairing> representatives;  // lexicographic orbit minima
  std::vector<std::vector<size_t>> members;  // input indices per class
};

// Partition of one-cube pairings under the induced action of the 48 cube
// symmetries. Throws MalformedPairing on invalid input.
PairingClasses pairing_symmetry_classes(const std::vector<FacePairing>& ps);

// Number of gluing-map assignments per pairing: 8 per pair, or 4 per pair in
// transversal mode (reflections only, the orientation-compatible subset).
uint64_t gluing_count(const FacePairing& p, bool transversal);

// The code-th assignment, codes 0 .. gluing_count-1 in deterministic order.
Cubulation gluing_at(const FacePairing& p, uint64_t code, bool transversal);

// Materialized sequence of all assignments for one pairing.
std::vector<Cubulation> enumerate_gluings(const FacePairing& p,
                                          bool transversal = false);

// Applies cube symmetry h (index into cube_symmetries()) to every label of a
// one-cube-per-symmetry relabeling: faces move by the face action and gluing
// maps are conjugated by the slot actions. sym_of[i] is the symmetry applied
// to cube i; cube_perm[i] is its new index.
Cubulation relabel(const Cubulation& c, const std::vector<int>& cube_perm,
                   const std::vector<int>& sym_of);

// Convenience for n = 1: relabel by a single symmetry.
Cubulation relabel_one_cube(const Cubulation& c, int sym);

}  // namespace cubecensus
