#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

// Exact dense linear algebra over a field. Every routine here is plain
// Gauss-Jordan elimination: with an exact scalar (rationals) there is no
// rounding, so pivot choice only matters for reproducibility, not accuracy.
// Pivots are always the first nonzero entry in the column.

namespace filtcx {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct EchelonForm {
  DenseMatrix<Scalar> reduced;       // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <class Derived>
EchelonForm<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out{a.eval(), {}};
  auto& m = out.reduced;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<Eigen::Index>(row_echelon(a).pivots.size());
}

// Columns span the null space of a; one column per free variable.
template <class Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0) return DenseMatrix<Scalar>::Identity(cols, cols);
  const auto ech = row_echelon(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  DenseMatrix<Scalar> k = DenseMatrix<Scalar>::Zero(cols, cols - static_cast<Eigen::Index>(ech.pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, out) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      k(ech.pivots[r], out) = -ech.reduced(static_cast<Eigen::Index>(r), f);
    ++out;
  }
  return k;
}

// The pivot columns of a itself: a basis of its column space.
template <class Derived>
DenseMatrix<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() == 0 || a.cols() == 0) return DenseMatrix<Scalar>::Zero(a.rows(), 0);
  const auto ech = row_echelon(a);
  DenseMatrix<Scalar> out(a.rows(), static_cast<Eigen::Index>(ech.pivots.size()));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = a.col(ech.pivots[i]);
  return out;
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug << a, DenseMatrix<Scalar>::Identity(n, n);
  const auto ech = row_echelon(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return ech.reduced.rightCols(n);
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  DenseMatrix<Scalar> m = a.eval();
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar f = m(i, c) / m(c, c);
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return false;
  return true;
}

template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// First nonzero entry in column-major order, as (row, col).
template <class Derived>
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_nonzero(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

// Sylvester's criterion: all leading principal minors strictly positive.
template <class Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& a) {
  if (!is_symmetric(a)) return false;
  for (Eigen::Index k = 1; k <= a.rows(); ++k)
    if (!(determinant(a.topLeftCorner(k, k)) > 0)) return false;
  return true;
}

// Projection onto span(K) that is orthogonal for the scalar product G.
template <class DK, class DG>
DenseMatrix<typename DK::Scalar> gram_projector(const Eigen::MatrixBase<DK>& k, const Eigen::MatrixBase<DG>& g) {
  using Scalar = typename DK::Scalar;
  if (k.cols() == 0) return DenseMatrix<Scalar>::Zero(k.rows(), k.rows());
  const DenseMatrix<Scalar> kt_g = k.transpose() * g;
  return k * inverse(kt_g * k) * kt_g;
}

}  // namespace filtcx
