#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubecensus/abelian_group.hpp"

namespace cubecensus {

enum class BoundKind {
  kTriangulation,
  kHeegaard,
  kHeegaardImproved,
  kSurgery,
  kMatveevUpper,
  kMatveevLower,
  kOneCubeMatveev,
};

struct ComplexityBound {
  BoundKind kind;
  uint64_t value = 0;
  std::string inputs;  // echoed arguments

  std::string to_string() const;
};

// sc(M) <= 4n for a triangulation with n tetrahedra.
ComplexityBound sc_upper_triangulation(uint64_t n);

// sc(M) <= 4n from a Heegaard splitting whose meridian systems meet in n
// points; with the improved hypothesis, sc(M) <= 4n - 4m. Throws
// InvalidCounts when m > n.
ComplexityBound sc_upper_heegaard(uint64_t n,
                                  std::optional<uint64_t> m = std::nullopt);

struct SurgeryPresentation {
  uint64_t crossings = 0;           // n
  uint64_t no_overpass_components = 0;  // m
  std::vector<int64_t> framings;
  std::vector<int64_t> writhes;  // same length as framings
};

// sc(M) <= 8n + 4m, plus 4*sum |fr_i - w_i| away from blackboard framing.
ComplexityBound sc_upper_surgery(const SurgeryPresentation& p);

struct BoundInterval {
  uint64_t lower = 0;
  uint64_t upper = 0;
};

// Mutual bounds between surface complexity and Matveev complexity for
// P^2-irreducible manifolds other than the two exceptional lens spaces:
// sc <= 4c and c <= 8 sc (6 sc when orientable).
BoundInterval matveev_from_sc(uint64_t sc, bool orientable);
BoundInterval sc_from_matveev(uint64_t c, bool orientable);

// The exceptional pairs (c, sc) for "L3,1" and "L4,1"; nullopt otherwise.
struct ExceptionEntry {
  uint64_t matveev;
  uint64_t sc;
};
std::optional<ExceptionEntry> complexity_exception(const std::string& name);

// Matveev complexity of any manifold with a one-cube cubulation is at most 6.
ComplexityBound one_cube_matveev_bound();

// ---------------------------------------------------------------------------
// Seifert invariants and the first-homology targets used to match census
// classes against the known manifolds of this complexity.

enum class SeifertBase { kSphere, kProjectivePlane };

struct SeifertInvariants {
  SeifertBase base = SeifertBase::kSphere;
  std::vector<std::pair<int64_t, int64_t>> exceptional;  // (a_i, b_i), a_i >= 1
};

// Abelianization of the standard Seifert presentation, via Smith normal form.
// Sphere base: relations a_i x_i + b_i h = 0 and sum x_i = 0.
// Projective-plane base: additionally 2h = 0 and sum x_i + 2v = 0.
AbelianGroup seifert_h1(const SeifertInvariants& s);

struct Table1Target {
  std::string name;
  AbelianGroup h1;
};

// The 11 known irreducible orientable manifolds at this complexity, with
// their H1 fingerprints (4 lens spaces, 2 further elliptic Seifert manifolds,
// the 3-torus and 4 further flat manifolds).
std::vector<Table1Target> table1_targets();

struct Table1Match {
  Table1Target target;
  std::vector<std::string> signatures;  // census classes realizing the H1
};

struct Table1Report {
  std::vector<Table1Match> matches;
  // Orientable classes matching no target: reducible or lower-complexity
  // candidates, identified by signature and H1 string.
  std::vector<std::pair<std::string, std::string>> unmatched;
};

}  // namespace cubecensus
