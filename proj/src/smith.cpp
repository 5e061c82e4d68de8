#include "cubecensus/smith.hpp"

#include <cstdlib>
#include <utility>

namespace cubecensus {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  assert(a.cols() == b.rows());
  IntegerMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  assert(m.rows() == m.cols());
  size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

struct Reducer {
  IntegerMatrix a;
  IntegerMatrix u, v;
  bool transforms;

  Reducer(const IntegerMatrix& m, bool t)
      : a(m),
        u(t ? IntegerMatrix::identity(m.rows()) : IntegerMatrix()),
        v(t ? IntegerMatrix::identity(m.cols()) : IntegerMatrix()),
        transforms(t) {}

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (transforms)
      for (size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (transforms)
      for (size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  void add_row(size_t dst, size_t src, const Integer& f) {  // row dst += f*src
    for (size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
    if (transforms)
      for (size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
  }
  void add_col(size_t dst, size_t src, const Integer& f) {
    for (size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
    if (transforms)
      for (size_t r = 0; r < v.rows(); ++r) v(r, dst) += f * v(r, src);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (transforms)
      for (size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m, bool want_transforms) {
  Reducer red(m, want_transforms);
  IntegerMatrix& a = red.a;
  const size_t rows = a.rows(), cols = a.cols();
  const size_t bound = rows < cols ? rows : cols;

  for (size_t k = 0; k < bound; ++k) {
    // Re-select the smallest nonzero entry of the trailing submatrix before
    // every clearing round; pivots then shrink along gcd chains and the
    // coefficient growth stays tame.
    while (true) {
      size_t pr = k, pc = k;
      bool found = false;
      Integer best = 0;
      for (size_t i = k; i < rows; ++i) {
        for (size_t j = k; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer mag = abs(a(i, j));
          if (!found || mag < best) {
            best = mag;
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) {
        k = bound;  // the submatrix is zero
        break;
      }
      red.swap_rows(k, pr);
      red.swap_cols(k, pc);
      if (a(k, k) < 0) red.negate_row(k);

      bool dirty = false;
      for (size_t i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        red.add_row(i, k, -(a(i, k) / a(k, k)));
        dirty |= a(i, k) != 0;  // remainder: round again with a smaller pivot
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        red.add_col(j, k, -(a(k, j) / a(k, k)));
        dirty |= a(k, j) != 0;
      }
      if (dirty) continue;
      // Pivot must divide the rest of the submatrix before moving on.
      bool divides = true;
      for (size_t i = k + 1; i < rows && divides; ++i) {
        for (size_t j = k + 1; j < cols && divides; ++j) {
          if (a(i, j) % a(k, k) != 0) {
            red.add_row(k, i, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (k == bound) break;
  }

  SmithResult out;
  out.diagonal = a;
  for (size_t k = 0; k < bound; ++k) {
    if (a(k, k) != 0) out.invariant_factors.push_back(a(k, k));
  }
  if (want_transforms) {
    out.left = std::move(red.u);
    out.right = std::move(red.v);
    out.has_transforms = true;
  }
  return out;
}

}  // namespace cubecensus
