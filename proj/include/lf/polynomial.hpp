#pragma once

#include "lf/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lf {

// Polynomial in nvars variables over Q. Terms are kept in lex order with
// x_0 > x_1 > ..., so the leading term is the last map entry.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rat>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(const Exponent& e, const Rat& c = Rat(1));

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rat& c);
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rat& leading_coefficient() const { return terms_.rbegin()->second; }
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // x_var := value
  Polynomial substitute(int var, const Rat& value) const;
  Polynomial derivative(int var) const;
  // variable i goes to index map[i] of a ring with n variables; map[i] < 0
  // requires the variable to be absent
  Polynomial remap(const std::vector<int>& map, int n) const;
  bool involves(int var) const;

 private:
  int nvars_;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rat& c);
Polynomial pow(const Polynomial& f, unsigned k);

std::string to_string(const Polynomial& f, const std::vector<std::string>& names = {});

// Reduced lex Groebner basis, monic, sorted by leading exponent.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
bool is_unit_ideal(const std::vector<Polynomial>& basis);

// Number of distinct common zeros over the algebraic closure, or nullopt when
// the zero set is positive dimensional. The unit ideal gives 0.
std::optional<size_t> count_solutions(const std::vector<Polynomial>& gens);

// Determinant of a small square matrix of polynomials by cofactor expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace lf
