#pragma once

#include "genusgrid/error.hpp"

#include <Eigen/Core>

#include <utility>

namespace genusgrid {

/// Exact division used by fraction-free elimination. Integral scalars must
/// divide evenly; other rings provide their own exact operator/.
template <class Scalar>
Scalar exact_divide(const Scalar& a, const Scalar& b) {
  if constexpr (requires { a % b; }) {
    if (a % b != 0) throw Error(ErrorKind::NotExact, "inexact integer division");
  }
  return a / b;
}

/// Determinant by Bareiss fraction-free elimination: every intermediate
/// entry is a minor of the input, so integer and polynomial scalars stay
/// exact. Row swaps flip the sign. The empty matrix has determinant 1.
template <class Scalar>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::PreconditionViolated, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_divide<Scalar>(t, previous);
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace genusgrid
