#include <random>

#include "cubecensus/smith.hpp"
#include "doctest.h"
#include "snf_oracle.hpp"

using namespace cubecensus;
using cubecensus::testing::naive_invariant_factors;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("coprime diagonal folds into the divisor chain") {
  auto s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 6);
}

TEST_CASE("zero matrix has rank 0") {
  auto s = smith_normal_form(IntegerMatrix(3, 4));
  CHECK(s.invariant_factors.empty());
  auto e = smith_normal_form(IntegerMatrix(0, 0));
  CHECK(e.invariant_factors.empty());
}

TEST_CASE("[[4,2],[-2,0]] has invariant factors (2,2)") {
  auto s = smith_normal_form(from_rows({{4, 2}, {-2, 0}}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 2);
}

TEST_CASE("transforms reproduce the diagonal exactly: U*m*V = D") {
  auto m = from_rows({{6, 4, 1}, {0, 0, 2}, {3, -9, 12}});
  auto s = smith_normal_form(m, true);
  REQUIRE(s.has_transforms);
  CHECK(multiply(multiply(s.left, m), s.right) == s.diagonal);
  Integer du = determinant(s.left), dv = determinant(s.right);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

TEST_CASE("500 random matrices: oracle factors, exact transforms, chain") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 500; ++trial) {
    size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    IntegerMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        m(i, j) = static_cast<long>(rng() % 21) - 10;

    auto s = smith_normal_form(m, true);
    // U*m*V = D with unimodular transforms certifies the diagonal
    CHECK(multiply(multiply(s.left, m), s.right) == s.diagonal);
    Integer du = determinant(s.left), dv = determinant(s.right);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (size_t i = 0; i < s.diagonal.rows(); ++i)
      for (size_t j = 0; j < s.diagonal.cols(); ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (size_t k = 0; k + 1 < s.invariant_factors.size(); ++k) {
      CHECK(s.invariant_factors[k] > 0);
      CHECK(s.invariant_factors[k + 1] % s.invariant_factors[k] == 0);
    }
    // ...and the independent reduction oracle agrees
    CHECK(s.invariant_factors == naive_invariant_factors(m));
  }
}
