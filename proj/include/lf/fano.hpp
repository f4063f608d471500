#pragma once

#include "lf/git.hpp"
#include "lf/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace lf {

// Complete intersection of generic sections of line bundles in a toric GIT quotient.
struct CiModel {
  GitPresentation ambient;
  std::vector<IntVector> bundles;
};

// Codimension-three Pfaffian locus: the five 4x4 Pfaffians of a 5x5 skew
// matrix, equation i of weight E[i].
struct PfaffianModel {
  GitPresentation ambient;
  std::vector<IntVector> equation_weights;
};

using PolyMatrix = std::array<std::array<Polynomial, 5>, 5>;

IntVector adjunction_ci(const GitPresentation& G, const std::vector<IntVector>& bundles);
IntVector adjunction_pfaffian(const GitPresentation& G, const std::vector<IntVector>& E);

// c_i = (E_1 + ... + E_5)/4 - E_i; entry (j,k) of the matrix has weight c_j + c_k.
std::array<RatVector, 5> pfaffian_column_weights(const std::vector<IntVector>& E);
RatVector entry_weight(const std::array<RatVector, 5>& c, int j, int k);

std::array<Polynomial, 5> pfaffian_equations(const PolyMatrix& A);
PolyMatrix build_generic_pfaffian(const PfaffianModel& model, const std::function<Rat(size_t)>& coeff = {});

EquationSystem equation_system(const CiModel& model, const std::function<Rat(size_t)>& coeff = {});
EquationSystem equation_system(const PfaffianModel& model, const std::function<Rat(size_t)>& coeff = {});

std::vector<Int> quantum_period_ci(const CiModel& model, int K);

// Largest r such that every computed p_k with r not dividing k vanishes.
int fano_index(const std::vector<Int>& period);

struct Basket {
  std::vector<std::pair<std::string, size_t>> points;  // type label, multiplicity
  std::vector<std::string> details;
  std::vector<std::string> warnings;
  bool verified() const { return warnings.empty(); }
  size_t total() const;
  std::string to_string() const;  // {2x1/2(1,1,1), 1/3(1,1,2)}
};

Basket basket(const GitPresentation& G, const EquationSystem& X);

// Runs the analysis with all-ones coefficients and again with small random
// positive coefficients.
struct BasketReport {
  Basket ones;
  Basket random;
  bool consistent() const { return ones.points == random.points; }
};

BasketReport basket_report(const CiModel& model, unsigned seed = 1);
BasketReport basket_report(const PfaffianModel& model, unsigned seed = 1);

}  // namespace lf
