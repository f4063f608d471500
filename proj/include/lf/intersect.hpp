#pragma once

#include "lf/fano.hpp"
#include "lf/git.hpp"
#include "lf/polynomial.hpp"

#include <vector>

namespace lf {

// Rational Chow ring of a simplicial GIT quotient, presented on the weight
// lattice: Q[t_1..t_r] modulo the Stanley-Reisner monomials in the D_i.
// Divisor classes are polynomials of degree one in t.
class ToricIntersection {
 public:
  explicit ToricIntersection(const GitPresentation& G);

  int dimension() const { return dim_; }
  Polynomial linear(const RatVector& cls) const;
  Polynomial linear(const IntVector& cls) const { return linear(to_rat(cls)); }
  Polynomial divisor(int i) const { return linear(G_.column(i)); }
  // product of the divisors not in chart S: one point with stabilizer of order mult(S)
  Polynomial chart_class(const IndexSet& S) const;
  Int multiplicity(const IndexSet& S) const;

  // degree of a homogeneous class of top degree
  Rat degree(const Polynomial& p) const;
  Rat top_intersection(const std::vector<RatVector>& classes) const;

  const std::vector<IndexSet>& primitive_collections() const { return primitive_; }
  const std::vector<Polynomial>& relations() const { return basis_; }

 private:
  GitPresentation G_;
  int dim_;
  Int kernel_order_;
  std::vector<IndexSet> primitive_;
  std::vector<Polynomial> basis_;
  IndexSet reference_;
  Exponent top_monomial_;
  Rat reference_value_;
};

Rat degree_ci(const CiModel& model);

struct PfaffianDegree {
  Rat degree;
  Rat ratio;            // class pairing over the chart-normalizer pairing
  IndexSet normalizer;  // smooth chart used for the ratio
};

// Elementary symmetric polynomials e_0..e_k of the given linear forms.
std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& roots, int k);

PfaffianDegree degree_pfaffian(const PfaffianModel& model);

}  // namespace lf
