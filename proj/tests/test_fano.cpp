#include "doctest.h"
#include "models.hpp"
#include "polys.hpp"

#include "lf/errors.hpp"
#include "lf/fano.hpp"
#include "lf/laurent.hpp"

#include <random>

using namespace lf;

namespace {

Int factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string weight_label(const RatVector& w) {
  std::string s;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += to_string(w(i));
  return s;
}

// Pfaffian of the 4x4 principal submatrix on rows/columns idx, by definition
// as a signed sum over the three perfect matchings
Polynomial pf4(const PolyMatrix& A, const std::array<int, 4>& i) {
  return A[i[0]][i[1]] * A[i[2]][i[3]] - A[i[0]][i[2]] * A[i[1]][i[3]] + A[i[0]][i[3]] * A[i[1]][i[2]];
}

PolyMatrix skew(const std::vector<std::vector<Polynomial>>& upper, int n) {
  PolyMatrix A;
  for (auto& row : A)
    for (auto& x : row) x = Polynomial(n);
  for (int j = 0; j < 5; ++j)
    for (int k = j + 1; k < 5; ++k) {
      A[j][k] = upper[j][k - j - 1];
      A[k][j] = -A[j][k];
    }
  return A;
}

}  // namespace

TEST_CASE("adjunction") {
  auto M = test::q38989();
  CHECK(adjunction_ci(M.ambient, M.bundles) == int_vector({2, 3}));
  CHECK(adjunction_ci(M.ambient, {}) == M.ambient.anticanonical());
  auto P = test::q33018();
  CHECK(adjunction_pfaffian(P.ambient, P.equation_weights) == int_vector({1, 1, 1}));
  std::vector<IntVector> zero(5, int_vector({0, 0, 0}));
  CHECK(adjunction_pfaffian(P.ambient, zero) == P.ambient.anticanonical());
  auto odd = P.equation_weights;
  odd[0](0) += 1;
  CHECK_THROWS_AS(adjunction_pfaffian(P.ambient, odd), InputError);
}

TEST_CASE("pfaffian entry weights") {
  auto c = pfaffian_column_weights(test::q33018().equation_weights);
  std::vector<std::string> got;
  for (int j = 0; j < 5; ++j)
    for (int k = j + 1; k < 5; ++k) got.push_back(weight_label(entry_weight(c, j, k)));
  CHECK(got == std::vector<std::string>{"200", "-112", "110", "010", "101", "30-1", "20-1", "011", "-111", "11-1"});
  CHECK(c[0] == rat_vector({0, 1, 1}) / Rat(2));
}

TEST_CASE("pfaffian weights sum back to the equation weights") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 30; ++t) {
    std::vector<IntVector> E;
    for (int i = 0; i < 5; ++i) E.push_back(int_vector({d(rng), d(rng)}));
    auto c = pfaffian_column_weights(E);
    for (int i = 0; i < 5; ++i) {
      RatVector s = RatVector::Zero(2);
      for (int j = 0; j < 5; ++j)
        if (j != i) s += c[j];
      CHECK(s == to_rat(E[i]));
    }
  }
}

TEST_CASE("pfaffians of a numeric skew matrix") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<Polynomial>> up(5);
    for (int j = 0; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) up[j].push_back(Polynomial::constant(1, Rat(d(rng))));
    auto A = skew(up, 1);
    auto P = pfaffian_equations(A);
    for (int i = 0; i < 5; ++i) {
      std::array<int, 4> idx;
      int n = 0;
      for (int s = 0; s < 5; ++s)
        if (s != i) idx[n++] = s;
      CHECK(P[i] == pf4(A, idx));
    }
    // the signed Pfaffians span the kernel of A
    for (int j = 0; j < 5; ++j) {
      Polynomial s(1);
      for (int k = 0; k < 5; ++k) s += A[j][k] * P[k] * Rat(k % 2 ? -1 : 1);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("toric pfaffian matrix gives the binomial equations") {
  auto x = [](int i) { return Polynomial::variable(9, i - 1); };
  Polynomial z(9);
  auto A = skew({{x(1) * x(1), x(6), x(4) * x(5), x(2)}, {z, x(7), x(8)}, {x(2) * x(3), x(9)}, {z}}, 9);
  auto P = pfaffian_equations(A);
  std::vector<std::string> eq;
  for (const auto& p : P) eq.push_back(to_string(p));
  CHECK(eq == std::vector<std::string>{"x2*x3*x8 - x7*x9", "x2^2*x3 - x4*x5*x9", "x2*x7 - x4*x5*x8",
                                       "x1^2*x9 - x6*x8", "x1^2*x2*x3 - x6*x7"});
  auto rank2 = skew({{x(1), z, z, z}, {z, z, z}, {z, z}, {z}}, 9);
  for (const auto& p : pfaffian_equations(rank2)) CHECK(p.is_zero());
}

TEST_CASE("generic pfaffian matrix") {
  auto A = build_generic_pfaffian(test::q33018());
  CHECK(to_string(A[0][1]) == "x1^2 + x1*x3*x4 + x3^2*x4^2 + x3*x8");
  CHECK(to_string(A[2][4]) == "x9");
  CHECK(to_string(A[0][4]) == "x2 + x4*x9");
  CHECK(to_string(A[3][4]) == "x2*x4 + x4^2*x9");
  CHECK(to_string(A[1][2]) == "x1*x3 + x3^2*x4");
  CHECK(A[1][0] == -A[0][1]);
}

TEST_CASE("quantum periods of projective complete intersections") {
  CHECK(quantum_period_ci(test::projective_space(2), 6) ==
        classical_period(test::p2_poly(), 6));
  auto cubic = quantum_period_ci(test::projective_space(4, {3}), 10);
  for (int d = 0; d <= 10; ++d) {
    Int expect = 0;
    if (d % 2 == 0) expect = factorial(d) * factorial(3 * d / 2) / pow(factorial(d / 2), 5);
    CHECK(cubic[d] == expect);
  }
  CHECK(cubic[2] == 12);
  CHECK(fano_index(cubic) == 2);
  CHECK(fano_index(quantum_period_ci(test::projective_space(2), 9)) == 3);
  CHECK(fano_index({1, 0, 2, 6, 24, 0, 1, 1, 1, 1, 1}) == 1);
  // a (2,0) divisor in P1 x P1 has -K = (0,2), which does not grade the first factor
  auto quadric = make_presentation(int_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}}), rat_vector({1, 1}));
  CHECK_THROWS_AS(quantum_period_ci(CiModel{quadric, {int_vector({2, 0})}}, 3), UnboundedEnumeration);
}

TEST_CASE("hypersurface basket") {
  auto r = basket_report(test::q38989());
  CHECK(r.ones.to_string() == "{2x1/2(1,1,1), 1/3(1,1,2), 1/4(1,1,3)}");
  CHECK(r.ones.verified());
  CHECK(r.consistent());
}

TEST_CASE("pfaffian basket") {
  auto r = basket_report(test::q33018());
  CHECK(r.ones.to_string() == "{2x1/2(1,1,1), 1/3(1,1,2)}");
  CHECK(r.ones.verified());
  CHECK(r.consistent());
}

TEST_CASE("smooth hypersurface has an empty basket") {
  auto r = basket_report(test::projective_space(4, {3}));
  CHECK(r.ones.points.empty());
  CHECK(r.ones.verified());
}
