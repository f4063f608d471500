#pragma once

#include "lf/scalar.hpp"

#include <optional>
#include <utility>

namespace lf {

template <class Scalar>
struct HermiteForm {
  Matrix<Scalar> H;  // U * A, row echelon, positive pivots, reduced above pivots
  Matrix<Scalar> U;  // unimodular
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <class Scalar>
struct SmithForm {
  Matrix<Scalar> S;  // U * A * V, diagonal with S(i,i) | S(i+1,i+1)
  Matrix<Scalar> U;
  Matrix<Scalar> V;
};

namespace detail {

template <class Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Scalar>
Scalar magnitude(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

}  // namespace detail

// Row-style Hermite normal form: U * A = H.
template <class Scalar>
HermiteForm<Scalar> hermite_normal_form(const Matrix<Scalar>& A) {
  using detail::magnitude;
  const Eigen::Index m = A.rows(), n = A.cols();
  HermiteForm<Scalar> out;
  out.H = A;
  out.U = Matrix<Scalar>::Identity(m, m);
  auto& H = out.H;
  auto& U = out.U;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < n && row < m; ++c) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < m; ++r)
        if (H(r, c) != 0 && (best < 0 || magnitude(H(r, c)) < magnitude(H(best, c)))) best = r;
      if (best < 0) break;
      if (best != row) {
        H.row(best).swap(H.row(row));
        U.row(best).swap(U.row(row));
      }
      bool clean = true;
      for (Eigen::Index r = row + 1; r < m; ++r) {
        if (H(r, c) == 0) continue;
        Scalar q = H(r, c) / H(row, c);
        H.row(r) -= q * H.row(row);
        U.row(r) -= q * U.row(row);
        if (H(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, c) == 0) continue;
    if (H(row, c) < 0) {
      H.row(row) *= Scalar(-1);
      U.row(row) *= Scalar(-1);
    }
    for (Eigen::Index r = 0; r < row; ++r) {
      Scalar q = detail::floor_div(H(r, c), H(row, c));
      if (q != 0) {
        H.row(r) -= q * H.row(row);
        U.row(r) -= q * U.row(row);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

template <class Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  using detail::magnitude;
  const Eigen::Index m = A.rows(), n = A.cols();
  SmithForm<Scalar> out{A, Matrix<Scalar>::Identity(m, m), Matrix<Scalar>::Identity(n, n)};
  auto& S = out.S;
  auto& U = out.U;
  auto& V = out.V;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (S(i, j) != 0 && (bi < 0 || magnitude(S(i, j)) < magnitude(S(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return out;
      if (bi != t) {
        S.row(bi).swap(S.row(t));
        U.row(bi).swap(U.row(t));
      }
      if (bj != t) {
        S.col(bj).swap(S.col(t));
        V.col(bj).swap(V.col(t));
      }
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Scalar q = S(i, t) / S(t, t);
        S.row(i) -= q * S.row(t);
        U.row(i) -= q * U.row(t);
        if (S(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Scalar q = S(t, j) / S(t, t);
        S.col(j) -= q * S.col(t);
        V.col(j) -= q * V.col(t);
        if (S(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // divisibility: fold an offending row into row t and go again
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      S.row(t) += S.row(bad);
      U.row(t) += U.row(bad);
    }
    if (S(t, t) < 0) {
      S.row(t) *= Scalar(-1);
      U.row(t) *= Scalar(-1);
    }
  }
  return out;
}

// Rows form a basis of the saturated lattice {v : A v = 0}, in Hermite form.
template <class Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& A) {
  auto hf = hermite_normal_form<Scalar>(A.transpose());
  const Eigen::Index rk = static_cast<Eigen::Index>(hf.pivots.size());
  Matrix<Scalar> K = hf.U.bottomRows(A.cols() - rk);
  if (K.rows() == 0) return K;
  auto hk = hermite_normal_form<Scalar>(K);
  return hk.H.topRows(hk.pivots.size());
}

// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
template <class Scalar>
Matrix<Scalar> row_lattice_basis(const Matrix<Scalar>& A) {
  auto hf = hermite_normal_form<Scalar>(A);
  return hf.H.topRows(hf.pivots.size());
}

template <class Scalar>
bool row_lattice_equal(const Matrix<Scalar>& A, const Matrix<Scalar>& B) {
  if (A.cols() != B.cols()) return false;
  Matrix<Scalar> a = row_lattice_basis(A), b = row_lattice_basis(B);
  return a.rows() == b.rows() && a == b;
}

// Reduced row echelon form over a field; returns the pivot columns.
template <class Field>
std::vector<Eigen::Index> row_reduce(Matrix<Field>& A) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < A.cols() && row < A.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < A.rows(); ++r)
      if (A(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row) A.row(p).swap(A.row(row));
    Field inv = Field(1) / A(row, c);
    A.row(row) *= inv;
    for (Eigen::Index r = 0; r < A.rows(); ++r)
      if (r != row && A(r, c) != 0) {
        Field f = A(r, c);
        A.row(r) -= f * A.row(row);
      }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Eigen::Index rank(const IntMatrix& A);
Eigen::Index rank(const RatMatrix& A);
Rat determinant(const RatMatrix& A);
Int determinant(const IntMatrix& A);

// Some solution of A x = b over the rationals, if one exists.
std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b);

// Elementary divisors (nonzero Smith diagonal entries) of A.
std::vector<Int> elementary_divisors(const IntMatrix& A);

// Index of the column lattice of A inside its saturation.
Int saturation_index(const IntMatrix& A);

bool is_unimodular(const IntMatrix& A);
IntMatrix inverse_unimodular(const IntMatrix& A);

}  // namespace lf
