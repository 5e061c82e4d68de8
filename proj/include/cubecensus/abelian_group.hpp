#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cubecensus {

using Integer = boost::multiprecision::cpp_int;

// Finitely generated abelian group in canonical form: free rank plus torsion
// coefficients d1 | d2 | ... , each > 1. Equality is field comparison.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }
  bool operator<(const AbelianGroup& o) const {
    if (free_rank != o.free_rank) return free_rank < o.free_rank;
    return torsion < o.torsion;
  }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  // Rendered as "0", "Z", "Z^r", with " + Z/d" per torsion coefficient.
  std::string to_string() const;

  // Display-only alternative with torsion split into prime-power factors,
  // e.g. Z/6 -> "Z/2 + Z/3". The divisor chain stays the canonical form.
  std::string to_string_primary() const;

  static AbelianGroup free(long rank) { return {rank, {}}; }
  static AbelianGroup cyclic(long n) {
    if (n <= 1) return {n == 0 ? 1 : 0, {}};
    return {0, {Integer(n)}};
  }
};

AbelianGroup parse_abelian_group(const std::string& s);  // inverse of to_string

}  // namespace cubecensus
