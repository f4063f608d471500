#include "lf/lattice.hpp"

#include "lf/errors.hpp"

namespace lf {

Eigen::Index rank(const RatMatrix& A) {
  RatMatrix B = A;
  return static_cast<Eigen::Index>(row_reduce(B).size());
}

Eigen::Index rank(const IntMatrix& A) { return rank(to_rat(A)); }

Rat determinant(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix B = A;
  Rat det = 1;
  const Eigen::Index n = B.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (B(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      B.row(p).swap(B.row(c));
      det = -det;
    }
    det *= B(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r)
      if (B(r, c) != 0) {
        Rat f = B(r, c) / B(c, c);
        B.row(r) -= f * B.row(c);
      }
  }
  return det;
}

Int determinant(const IntMatrix& A) { return numerator(determinant(to_rat(A))); }

std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b) {
  RatMatrix aug(A.rows(), A.cols() + 1);
  aug << A, b;
  auto pivots = row_reduce(aug);
  RatVector x = RatVector::Zero(A.cols());
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == A.cols()) return std::nullopt;
    x(pivots[i]) = aug(i, A.cols());
  }
  return x;
}

std::vector<Int> elementary_divisors(const IntMatrix& A) {
  auto sf = smith_normal_form<Int>(A);
  std::vector<Int> out;
  for (Eigen::Index i = 0; i < std::min(sf.S.rows(), sf.S.cols()); ++i)
    if (sf.S(i, i) != 0) out.push_back(sf.S(i, i));
  return out;
}

Int saturation_index(const IntMatrix& A) {
  Int prod = 1;
  for (const auto& d : elementary_divisors(A)) prod *= d;
  return prod;
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  Int d = determinant(A);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& A) {
  if (!is_unimodular(A)) throw InputError("matrix is not unimodular");
  // U * A = H = I for a unimodular square matrix
  return hermite_normal_form<Int>(A).U;
}

}  // namespace lf
