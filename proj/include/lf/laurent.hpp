#pragma once

#include "lf/polytope.hpp"
#include "lf/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lf {

class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Int>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int rank) : rank_(rank) {}
  LaurentPolynomial(int rank, const std::vector<std::pair<Exponent, long>>& terms);

  static LaurentPolynomial monomial(const Exponent& e, const Int& c = 1);
  static LaurentPolynomial constant(int rank, const Int& c);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Int& c);
  std::vector<IntVector> support() const;
  bool non_negative() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ < b.terms_;
  }

 private:
  int rank_ = 0;
  Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k);

// Exact quotient num / den in the Laurent ring over Z, if it exists.
std::optional<LaurentPolynomial> divide(const LaurentPolynomial& num, const LaurentPolynomial& den);

std::string to_string(const LaurentPolynomial& f);

LatticePolytope newton_polytope(const LaurentPolynomial& f);

// Constant terms of f^0..f^K. Throws ResourceLimit once an intermediate power
// exceeds max_terms monomials (0 means: read LF_MAX_TERMS, default 20 million).
std::vector<Int> classical_period(const LaurentPolynomial& f, int K, size_t max_terms = 0);

LaurentPolynomial change_basis(const LaurentPolynomial& f, const IntMatrix& U);

struct MutationDatum {
  IntVector w;
  LaurentPolynomial a;
};

bool is_valid(const MutationDatum& d);
bool is_mutable(const LaurentPolynomial& f, const MutationDatum& d);
LaurentPolynomial mutate(const LaurentPolynomial& f, const MutationDatum& d);

// Mutation data whose factor divides the lowest graded piece, for primitive
// covectors with |w|_inf <= w_bound.
std::vector<MutationDatum> mutation_candidates(const LaurentPolynomial& f, int w_bound);

struct MutationGraph {
  struct Vertex {
    IntMatrix label;  // normal form of the Newton polytope
    LaurentPolynomial representative;
    int depth = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<size_t, size_t>> edges;  // i < j

  std::optional<size_t> find(const IntMatrix& label) const;
  std::string to_dot() const;
};

MutationGraph mutation_graph(const LaurentPolynomial& f, int depth, int w_bound = 3);

enum class GraphOrder { Equal, Less, Greater, Incomparable };

// Finite-depth comparison of mutation graphs by labelled vertex and edge sets.
GraphOrder compare_graphs(const LaurentPolynomial& f, const LaurentPolynomial& g, int depth, int w_bound = 3);

}  // namespace lf
