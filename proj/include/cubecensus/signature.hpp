#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecensus/cubulation.hpp"

namespace cubecensus {

// Canonical byte string identifying a cubulation up to isomorphism of the
// cubic structure: cube re-indexings composed with the 48 symmetries per
// cube. Equal signatures <=> isomorphic cubulations (for connected gluing
// graphs, which covers every closed quotient). Deterministic across runs and
// platforms; decodable back to the canonical representative.
struct Signature {
  std::vector<uint8_t> bytes;

  bool operator==(const Signature& o) const { return bytes == o.bytes; }
  bool operator!=(const Signature& o) const { return bytes != o.bytes; }
  bool operator<(const Signature& o) const { return bytes < o.bytes; }

  std::string hex() const;
  static Signature from_hex(const std::string& s);  // throws ParseError
};

Signature isomorphism_signature(const Cubulation& c);

// Decodes the canonical representative stored in a signature.
Cubulation signature_to_cubulation(const Signature& s);

struct CensusClass {
  Signature signature;
  Cubulation representative;  // the canonical form itself
  uint64_t multiplicity = 0;  // labeled candidates mapping to this class
};

// Groups candidates by signature; classes are returned sorted by signature.
std::vector<CensusClass> dedupe(const std::vector<Cubulation>& candidates);

}  // namespace cubecensus
