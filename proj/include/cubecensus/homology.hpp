#pragma once

#include <array>

#include "cubecensus/abelian_group.hpp"
#include "cubecensus/integer_matrix.hpp"
#include "cubecensus/quotient.hpp"

namespace cubecensus {

// Boundary maps of the quotient chain complex over the flag subdivision.
// Cells carry the ascending-type orientation; identifications preserve types,
// so incidence coefficients need no correction signs.
struct ChainComplex {
  long n0 = 0, n1 = 0, n2 = 0, n3 = 0;
  IntegerMatrix d1;  // n0 x n1
  IntegerMatrix d2;  // n1 x n2
  IntegerMatrix d3;  // n2 x n3
};

ChainComplex build_chain_complex(const QuotientComplex& q);

// True iff d1*d2 == 0 and d2*d3 == 0 (exact identity).
bool boundary_squares_to_zero(const ChainComplex& cc);

// Simplicial homology H0..H3 of the quotient, computed via Smith normal form.
// Throws NotAManifold unless the quotient is a closed 3-manifold.
std::array<AbelianGroup, 4> homology(const QuotientComplex& q);

// Homology of an arbitrary chain complex (no manifold precondition); used by
// the manifold path and directly testable.
std::array<AbelianGroup, 4> homology_of_complex(const ChainComplex& cc);

}  // namespace cubecensus
