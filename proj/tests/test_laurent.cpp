#include "doctest.h"
#include "helpers.hpp"
#include "polys.hpp"

#include "lf/errors.hpp"
#include "lf/laurent.hpp"
#include "lf/lattice.hpp"

#include <random>

using namespace lf;

namespace {

// constant terms of f^k by plain repeated multiplication
std::vector<Int> naive_period(const LaurentPolynomial& f, int K) {
  std::vector<Int> out;
  auto p = LaurentPolynomial::constant(f.rank(), 1);
  for (int k = 0; k <= K; ++k) {
    out.push_back(p.coefficient(Exponent(f.rank(), 0)));
    p = p * f;
  }
  return out;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

LaurentPolynomial random_poly(std::mt19937& rng, int rank, int terms, int spread) {
  std::uniform_int_distribution<long> e(-spread, spread), c(1, 3);
  LaurentPolynomial f(rank);
  for (int t = 0; t < terms; ++t) {
    Exponent v(rank);
    for (auto& x : v) x = e(rng);
    f.add_term(v, c(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("period of the projective plane polynomial") {
  auto f = test::p2_poly();
  CHECK(classical_period(f, 6) == ints({1, 0, 0, 6, 0, 0, 90}));
  CHECK(classical_period(f, 9) == naive_period(f, 9));
}

TEST_CASE("period of x + 1/x is central binomial") {
  LaurentPolynomial f(1, {{{1}, 1}, {{-1}, 1}});
  CHECK(classical_period(f, 4) == ints({1, 0, 2, 0, 6}));
  CHECK(classical_period(f, 0) == ints({1}));
}

TEST_CASE("period of the index-two candidate") {
  auto f = test::f_index_two();
  CHECK(classical_period(f, 10) == ints({1, 0, 2, 0, 6, 0, 20, 0, 3430, 0, 75852}));
}

TEST_CASE("pruned period agrees with naive expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(rng, 2 + trial % 2, 4 + trial % 3, 2);
    CHECK(classical_period(f, 6) == naive_period(f, 6));
  }
}

TEST_CASE("period term budget") {
  auto f = test::f_index_two();
  CHECK_THROWS_AS(classical_period(f, 10, 5), ResourceLimit);
}

TEST_CASE("polynomial arithmetic and division") {
  auto x = LaurentPolynomial::monomial({1, 0}), y = LaurentPolynomial::monomial({0, 1});
  auto one = LaurentPolynomial::constant(2, 1);
  auto p = pow(one + x, 3) * (y + x * x);
  auto q = divide(p, one + x);
  REQUIRE(q);
  CHECK(*q == pow(one + x, 2) * (y + x * x));
  CHECK_FALSE(divide(y + one, one + x));
  CHECK_FALSE(divide(x + y, x + x));
  CHECK((p - p).is_zero());
}

TEST_CASE("Newton polytopes") {
  auto P = newton_polytope(test::p2_poly());
  CHECK(P.vertices.size() == 3);
  CHECK(classify_fano_polytope(P).fano);
  auto Q = newton_polytope(test::f_p519468());
  auto c = classify_fano_polytope(Q);
  CHECK(c.fano);
  CHECK(c.canonical);
  auto pt = newton_polytope(LaurentPolynomial(1, {{{2}, 1}}));
  CHECK_FALSE(pt.full_dimensional());
  CHECK(pt.dim == 0);
}

TEST_CASE("mutability") {
  LaurentPolynomial f(2, {{{1, 0}, 1}, {{0, -1}, 1}});
  auto a = LaurentPolynomial(2, {{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK_FALSE(is_mutable(f, {int_vector({0, 1}), a}));
  CHECK_THROWS_AS(mutate(f, {int_vector({0, 1}), a}), NotMutable);
  LaurentPolynomial g(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(is_mutable(g, {int_vector({0, 1}), a}));
  CHECK(mutate(g, {int_vector({1, 1}), LaurentPolynomial::constant(2, 1)}) == g);
  CHECK_THROWS_AS(is_mutable(g, {int_vector({0, 2}), a}), InputError);
}

TEST_CASE("mutation of the plane polynomial to P(1,1,4)") {
  auto f = test::p2_poly();
  MutationDatum d{int_vector({-1, -1}), LaurentPolynomial(2, {{{0, 0}, 1}, {{-1, 1}, 1}})};
  auto g = mutate(f, d);
  CHECK(g == LaurentPolynomial(2, {{{1, 0}, 1}, {{-1, -1}, 1}, {{-2, 0}, 2}, {{-3, 1}, 1}}));
  CHECK(classical_period(g, 9) == classical_period(f, 9));
  auto tri = convex_hull({int_vector({1, 0}), int_vector({-1, -1}), int_vector({-3, 1})});
  CHECK(same_polytope(newton_polytope(g), tri));
  CHECK(mutate(g, {IntVector(-d.w), d.a}) == f);
}

TEST_CASE("mutation graph of the plane polynomial") {
  auto f = test::p2_poly();
  auto G0 = mutation_graph(f, 0);
  CHECK(G0.vertices.size() == 1);
  CHECK(G0.edges.empty());
  auto G = mutation_graph(f, 1);
  auto tri = convex_hull({int_vector({1, 0}), int_vector({-1, -1}), int_vector({-3, 1})});
  auto idx = G.find(affine_normal_form(tri));
  REQUIRE(idx);
  CHECK(G.vertices[*idx].depth == 1);
  for (const auto& v : G.vertices) CHECK(classical_period(v.representative, 8) == classical_period(f, 8));
  CHECK(G.to_dot().find("v0 -- v") != std::string::npos);
  CHECK(compare_graphs(f, f, 1) == GraphOrder::Equal);
}

TEST_CASE("one-step mutation of f(P512391) reaches the polytope of f2") {
  auto f = test::f_p512391();
  auto target = affine_normal_form(newton_polytope(test::f2()));
  bool hit = false;
  for (const auto& d : mutation_candidates(f, 2)) {
    auto g = mutate(f, d);
    if (compare(affine_normal_form(newton_polytope(g)), target) == 0) {
      hit = true;
      CHECK(classical_period(g, 10) == classical_period(test::f2(), 10));
    }
  }
  CHECK(hit);
  CHECK(classical_period(test::f9(), 10) == classical_period(test::f_p519468(), 10));
}

TEST_CASE("random mutations preserve the period and invert") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto [f, d] = test::random_mutable(rng, 2 + trial % 2);
    REQUIRE(is_mutable(f, d));
    auto g = mutate(f, d);
    CHECK(classical_period(g, 8) == classical_period(f, 8));
    CHECK(mutate(g, {IntVector(-d.w), d.a}) == f);
  }
}

TEST_CASE("change of basis") {
  std::mt19937 rng(5);
  auto f = test::f_index_two();
  auto base = classical_period(f, 10);
  for (int t = 0; t < 5; ++t) {
    auto U = test::random_unimodular(rng, 3);
    CHECK(classical_period(change_basis(f, U), 10) == base);
  }
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  auto g = change_basis(test::p2_poly(), swap);
  CHECK(g == test::p2_poly());
  CHECK(change_basis(f, IntMatrix::Identity(3, 3)) == f);
}
