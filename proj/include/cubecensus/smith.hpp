#pragma once

#include <vector>

#include "cubecensus/integer_matrix.hpp"

namespace cubecensus {

// Smith normal form of an integer matrix: U * m * V = D with U, V unimodular
// and D diagonal, d1 | d2 | ... | dr followed by zeros. invariant_factors
// lists the nonzero diagonal entries (all positive).
struct SmithResult {
  std::vector<Integer> invariant_factors;
  IntegerMatrix diagonal;
  IntegerMatrix left;   // U, rows x rows
  IntegerMatrix right;  // V, cols x cols
  bool has_transforms = false;
};

SmithResult smith_normal_form(const IntegerMatrix& m,
                              bool want_transforms = false);

inline size_t rank(const SmithResult& s) { return s.invariant_factors.size(); }

}  // namespace cubecensus
