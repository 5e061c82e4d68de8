#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubecensus/abelian_group.hpp"
#include "cubecensus/bounds.hpp"
#include "cubecensus/cubulation.hpp"
#include "cubecensus/dehn_surface.hpp"
#include "cubecensus/quotient.hpp"
#include "cubecensus/signature.hpp"

namespace cubecensus {

struct CensusOptions {
  uint32_t n_cubes = 1;
  // Restrict to 3 pairing-class representatives x 4 reflection maps per pair
  // (192 candidates at one cube) instead of the full 15 x 8^3 = 7680.
  bool paper_transversal = false;
  bool parallel = false;
  int threads = 0;  // 0 = runtime default
};

struct CensusRecord {
  Signature signature;
  int pairing_class = -1;  // one-cube runs only
  bool manifold = true;
  bool orientable = false;
  std::array<AbelianGroup, 4> h;
  DualCounts dual;
  std::vector<long> surface_chis;  // per dual-surface component
  uint64_t multiplicity = 0;
  Cubulation representative;  // the canonical form decoded from the signature
};

struct CensusSummary {
  uint64_t raw_candidates = 0;
  uint64_t manifold_candidates = 0;
  uint64_t manifold_classes = 0;
  uint64_t orientable_classes = 0;
  uint64_t nonorientable_classes = 0;
};

struct CensusResult {
  CensusOptions options;
  CensusSummary summary;
  std::vector<CensusRecord> records;  // manifold classes, sorted by signature
};

// Serial reference pipeline: enumerate -> manifold filter -> dedupe ->
// invariants. Deterministic; records sorted by signature.
CensusResult run_census_serial(const CensusOptions& opts);

// OpenMP pipeline sharding candidates across threads; merging is associative,
// so the result is byte-identical to the serial reference.
CensusResult run_census_parallel(const CensusOptions& opts);

CensusResult run_census(const CensusOptions& opts);

// Pairing-class index (0..2) of a one-cube pairing in the canonical class
// list; -1 for multi-cube pairings.
int one_cube_pairing_class(const FacePairing& p);

// -------------------------------------------------------------------------
// Census file format (diff-able text, one record per line; see README):
//   #cube-census v1
//   #conventions <hex>
//   ... tab-separated records ...
//   #summary ...
void write_census(const CensusResult& r, std::ostream& out);
CensusResult read_census(std::istream& in);  // throws ParseError

// Full single-cubulation report.
struct DescribeReport {
  Cubulation cubulation;
  ManifoldCertificate certificate;
  bool orientable = false;             // valid when manifold
  std::array<AbelianGroup, 4> h;       // valid when manifold
  DualCounts dual;                     // valid when manifold
  std::vector<long> surface_chis;      // valid when manifold
  Signature signature;
  std::string render() const;
};

DescribeReport describe(const Cubulation& c);
DescribeReport describe(const std::string& text);  // throws ParseError

// Matches the orientable census classes against the 11 known target H1
// fingerprints; classes matching none are reported, not named.
Table1Report table1_report(const std::vector<CensusRecord>& records);

std::string render_table1(const Table1Report& report);

}  // namespace cubecensus
