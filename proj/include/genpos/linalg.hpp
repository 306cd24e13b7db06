#pragma once

// Exact dense linear algebra as free functions over Eigen expressions.
//
// Every routine here assumes an exact field scalar (comparisons with zero are
// decisive), so pivoting picks the first nonzero entry rather than the largest.

#include "genpos/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace genpos {

template <typename Scalar>
struct Rref {
  MatrixX<Scalar> matrix;             // rank() rows, each with a leading 1
  std::vector<Eigen::Index> pivots;   // pivot column of each row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form; zero rows are dropped. Unique for a given row
/// space, which makes it usable as a canonical key.
template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Sign of det(m) for square m: -1, 0 or +1.
template <typename Derived>
int determinant_sign(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  int s = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.row(p).swap(m.row(c));
      s = -s;
    }
    if (m(c, c) < 0) s = -s;
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar f = m(i, c) / m(c, c);
      m.row(i).tail(n - c) -= f * m.row(c).tail(n - c);
    }
  }
  return s;
}

/// Solution of a x = b when it exists and is unique.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve_unique(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.cols();
  MatrixX<Scalar> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto red = rref(aug);
  if (red.rank() != n) return std::nullopt;
  for (const auto p : red.pivots) {
    if (p == n) return std::nullopt;
  }
  return VectorX<Scalar>(red.matrix.col(n));
}

/// Rows of `rows` minus `base`, one per row: the difference vectors that
/// define an affine hull through `base`.
template <typename Derived, typename DerivedBase>
MatrixX<typename Derived::Scalar> differences(const Eigen::MatrixBase<Derived>& rows,
                                             const Eigen::MatrixBase<DerivedBase>& base) {
  MatrixX<typename Derived::Scalar> out = rows;
  for (Eigen::Index i = 0; i < out.rows(); ++i) out.row(i) -= base.transpose();
  return out;
}

}  // namespace genpos
