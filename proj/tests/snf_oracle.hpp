#pragma once

#include <utility>
#include <vector>

#include "cubecensus/integer_matrix.hpp"

namespace cubecensus::testing {

// Test-side reduction oracle: the plain textbook Smith reduction, written
// independently of the library path. Clears one pivot at a time with
// elementary operations only and no pivot-selection strategy.
inline std::vector<Integer> naive_invariant_factors(IntegerMatrix a) {
  size_t rows = a.rows(), cols = a.cols();
  std::vector<Integer> factors;
  size_t k = 0;
  while (k < rows && k < cols) {
    size_t pr = rows, pc = cols;
    for (size_t i = k; i < rows && pr == rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    for (size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pr, j));
    for (size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pc));
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        if (abs(a(i, k)) < abs(a(k, k)))
          for (size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(i, j));
        Integer f = a(i, k) / a(k, k);
        for (size_t j = 0; j < cols; ++j) a(i, j) -= f * a(k, j);
        if (a(i, k) != 0) again = true;
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        if (abs(a(k, j)) < abs(a(k, k)))
          for (size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, j));
        Integer f = a(k, j) / a(k, k);
        for (size_t i = 0; i < rows; ++i) a(i, j) -= f * a(i, k);
        if (a(k, j) != 0) again = true;
      }
      if (!again) {
        for (size_t i = k + 1; i < rows && !again; ++i)
          for (size_t j = k + 1; j < cols && !again; ++j)
            if (a(i, j) % a(k, k) != 0) {
              for (size_t jj = 0; jj < cols; ++jj) a(k, jj) += a(i, jj);
              again = true;
            }
      }
    }
    if (a(k, k) < 0)
      for (size_t j = 0; j < cols; ++j) a(k, j) = -a(k, j);
    factors.push_back(a(k, k));
    ++k;
  }
  return factors;
}

}  // namespace cubecensus::testing
