#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace lf {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

// Exponent vectors stay machine-sized; coefficients and matrix entries do not.
using Exponent = std::vector<long>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Int product(const std::vector<Int>& xs) {
  Int p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}
inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

// floor and ceiling of an exact rational
Int floor(const Rat& q);
Int ceil(const Rat& q);

// "p/q" or "p"; throws std::invalid_argument on garbage
Rat parse_rational(const std::string& s);
std::string to_string(const Int& a);
std::string to_string(const Rat& q);

template <class Derived>
Int content(const Eigen::MatrixBase<Derived>& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, Int(v(i)));
  return g;
}

// Divide by the gcd of the entries; the zero vector is returned unchanged.
template <class Derived>
IntVector primitive(const Eigen::MatrixBase<Derived>& v) {
  IntVector out = v;
  Int g = content(out);
  if (g > 1)
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline RatMatrix to_rat(const IntMatrix& m) { return m.cast<Rat>(); }
inline RatVector to_rat(const IntVector& v) { return v.cast<Rat>(); }

IntVector to_int_vector(const Exponent& e);
Exponent to_exponent(const IntVector& v);
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
IntVector int_vector(const std::vector<long>& entries);
RatVector rat_vector(const std::vector<Rat>& entries);

// Entry-wise lexicographic comparison, column-major for matrices.
int compare(const IntMatrix& a, const IntMatrix& b);
int compare(const IntVector& a, const IntVector& b);

struct IntVectorLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return compare(a, b) < 0; }
};

std::string to_string(const IntMatrix& m);
std::string to_string(const RatVector& v);

}  // namespace lf
