#pragma once

#include "lf/laurent.hpp"
#include "lf/lattice.hpp"
#include "lf/scalar.hpp"

#include <random>

namespace lf::test {

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary matrices, so unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937& rng, int n, int steps = 12) {
  IntMatrix U = IntMatrix::Identity(n, n);
  if (n < 2) {
    if (rng() % 2) U(0, 0) = -1;
    return U;
  }
  std::uniform_int_distribution<int> pick(0, n - 1), mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      U.row(i) *= Int(-1);
      continue;
    }
    U.row(i) += Int(mult(rng)) * U.row(j);
  }
  return U;
}

// f built grade by grade so that a^{-h} divides each negative piece
inline std::pair<LaurentPolynomial, MutationDatum> random_mutable(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<long> small(-2, 2);
  IntVector w;
  do {
    w = IntVector(rank);
    for (int i = 0; i < rank; ++i) w(i) = small(rng);
  } while (is_zero(w) || content(w) != 1);
  IntMatrix wrow(1, rank);
  wrow.row(0) = w.transpose();
  IntMatrix B = kernel_basis<Int>(wrow);
  auto perp = [&](int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntVector y(B.rows());
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = d(rng);
    return to_exponent((B.transpose() * y).eval());
  };
  auto a = LaurentPolynomial::constant(rank, 1) + LaurentPolynomial::monomial(perp(1));
  if (rng() % 2) a += LaurentPolynomial::monomial(perp(1));
  if (a.size() < 2) a += LaurentPolynomial::monomial(perp(2));
  // a lift of each grade h
  // w primitive: the first row of the HNF transform of w^T pairs to +-1 with w
  IntVector shift = hermite_normal_form<Int>(IntMatrix(w)).U.row(0).transpose();
  if (w.dot(shift) < 0) shift = -shift;
  LaurentPolynomial f(rank);
  for (long h = -2; h <= 2; ++h) {
    LaurentPolynomial piece(rank);
    int n = 1 + rng() % 2;
    for (int t = 0; t < n; ++t) {
      Exponent e = perp(1);
      for (int i = 0; i < rank; ++i) e[i] += h * shift(i).convert_to<long>();
      piece.add_term(e, 1 + rng() % 2);
    }
    f += h < 0 ? piece * pow(a, static_cast<unsigned>(-h)) : piece;
  }
  return {f, MutationDatum{w, a}};
}

}  // namespace lf::test
