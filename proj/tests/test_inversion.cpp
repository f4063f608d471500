#include "doctest.h"
#include "models.hpp"
#include "polys.hpp"

#include "lf/errors.hpp"
#include "lf/inversion.hpp"
#include "lf/lattice.hpp"
#include "lf/laurent.hpp"

#include <algorithm>
#include <random>

using namespace lf;

namespace {

// D.C for every invariant curve of a smooth complete surface, from the
// relations rho_{i-1} + rho_{i+1} = a_i rho_i around each ray
bool nef_by_curves(const ToricShape& Z, const IntVector& D) {
  const int n = Z.size();
  // walk the cycle of cones
  std::vector<int> next(n, -1), prev(n, -1);
  for (const auto& c : Z.max_cones) {
    IntMatrix M = columns(Z.rays, c);
    int a = c[0], b = c[1];
    if (determinant(M) < 0) std::swap(a, b);
    next[a] = b;
    prev[b] = a;
  }
  for (int i = 0; i < n; ++i) {
    IntVector s = Z.rays.col(prev[i]) + Z.rays.col(next[i]);
    auto q = solve(RatMatrix(Z.rays.col(i).cast<Rat>()), to_rat(s));
    Int ai = numerator((*q)(0));
    Int dc = D(prev[i]) + D(next[i]) - ai * D(i);
    if (dc < 0) return false;
  }
  return true;
}

IntVector col(const GitPresentation& G, const std::string& n) {
  auto it = std::find(G.names.begin(), G.names.end(), n);
  REQUIRE(it != G.names.end());
  return G.column(static_cast<int>(it - G.names.begin()));
}

}  // namespace

TEST_CASE("shape inference and primitive collections") {
  auto Z = test::q38989_scaffolding().shape.value();
  CHECK(Z.smooth());
  CHECK(Z.max_cones.size() == 4);
  CHECK(primitive_collections(Z) == std::vector<IndexSet>{{0, 1}, {2, 3}});
  auto P2 = infer_shape(int_matrix({{1, 0, -1}, {0, 1, -1}}));
  CHECK(primitive_collections(P2) == std::vector<IndexSet>{{0, 1, 2}});
  CHECK_THROWS_AS(infer_shape(int_matrix({{1, 1, -1}, {0, 2, -1}})), UnsupportedShape);
}

TEST_CASE("nefness agrees with curve intersection numbers") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<ToricShape> shapes = {test::q38989_scaffolding().shape.value(),
                                    infer_shape(int_matrix({{1, 0, -1}, {0, 1, -1}})),
                                    infer_shape(int_matrix({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}}))};
  for (const auto& Z : shapes)
    for (int t = 0; t < 60; ++t) {
      IntVector D(Z.size());
      for (int i = 0; i < Z.size(); ++i) D(i) = d(rng);
      CHECK(is_nef(Z, D) == nef_by_curves(Z, D));
    }
}

TEST_CASE("divisor polytopes of the plane") {
  auto P2 = infer_shape(int_matrix({{1, 0, -1}, {0, 1, -1}}));
  for (int k = 0; k <= 5; ++k) {
    auto P = divisor_polytope(P2, int_vector({0, 0, k}));
    CHECK(lattice_points(P).size() == static_cast<size_t>((k + 1) * (k + 2) / 2));
  }
  CHECK_THROWS_AS(divisor_polytope(P2, int_vector({1, -2, 0})), InputError);
}

TEST_CASE("scaffolding validation") {
  auto S = test::q38989_scaffolding();
  auto P = newton_polytope(test::f9());
  CHECK(validate_scaffolding(S, P));
  auto shuffled = S;
  std::reverse(shuffled.struts.begin(), shuffled.struts.end());
  CHECK(validate_scaffolding(shuffled, P));
  auto shifted = S;
  shifted.struts[0].chi(0) += 1;
  CHECK_FALSE(validate_scaffolding(shifted, P));
  CHECK(validate_scaffolding(test::q38917_scaffolding(), newton_polytope(test::f2())));

  Scaffolding single;
  single.nbar_rank = 2;
  single.shape = infer_shape(int_matrix({{1, 0, -1}, {0, 1, -1}}));
  single.struts = {{int_vector({1, 1, 1}), IntVector(0)}};
  CHECK(validate_scaffolding(single, divisor_polytope(*single.shape, int_vector({1, 1, 1}))));
}

TEST_CASE("point-strut inversion of the hypersurface example") {
  auto S = test::q38989_scaffolding();
  auto G = invert_pointstrut(S);
  CHECK(G.weights == int_matrix({{1, 0, 1, 1, -1, 1, 1}, {0, 1, 2, -2, 3, 1, -1}}));
  CHECK(G.names == std::vector<std::string>{"s1", "s2", "u1", "d1", "d2", "d3", "d4"});
  auto L = bundles_from_shape(S, G);
  CHECK(L == std::vector<IntVector>{int_vector({0, 1}), int_vector({2, 0})});
  CHECK(adjunction_ci(G, L) == int_vector({2, 3}));
  auto E = eliminate_linear(G, L);
  CHECK(E.ambient.weights == int_matrix({{1, 1, 1, -1, 1, 1}, {0, 2, -2, 3, 1, -1}}));
  CHECK(E.bundles == std::vector<IntVector>{int_vector({2, 0})});
  CHECK(E.ambient.omega == rat_vector({2, 3}));
  CHECK(E.removed == std::vector<std::string>{"s2=L1"});

  auto no_point = S;
  no_point.struts.pop_back();
  CHECK_THROWS_AS(invert_pointstrut(no_point), MissingPointStruts);
  auto doubled = S;
  doubled.struts.back().chi(0) = 2;
  CHECK_THROWS_AS(invert_pointstrut(doubled), MissingPointStruts);
}

TEST_CASE("point strut with zero translation gives a zero U-column") {
  Scaffolding S;
  S.nbar_rank = 2;
  S.nu_rank = 1;
  S.shape = infer_shape(int_matrix({{1, 0, -1}, {0, 1, -1}}));
  S.struts = {{int_vector({1, 1, 1}), int_vector({0})}, {int_vector({0, 0, 0}), int_vector({1})}};
  auto G = invert_pointstrut(S);
  CHECK(is_zero(IntVector(col(G, "u1"))));
  CHECK(bundles_from_shape(S, G) == std::vector<IntVector>{IntVector(col(G, "d1") + col(G, "d2") + col(G, "d3"))});
}

TEST_CASE("both inversions span the same lattice") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 30; ++t) {
    Scaffolding S = test::q38989_scaffolding();
    S.struts.pop_back();
    for (auto& s : S.struts) {
      for (Eigen::Index i = 0; i < s.D.size(); ++i) s.D(i) = d(rng);
      s.chi(0) = d(rng);
    }
    S.struts.push_back({IntVector::Zero(4), int_vector({1})});
    auto G = invert_pointstrut(S);
    auto R = invert_raymap(S);
    // raymap columns are s1 s2 s3 d1..d4 with s3 the point strut
    auto P = select_columns(R.weights, {"s1", "s2", "s3", "d1", "d2", "d3", "d4"});
    CHECK(row_lattice_equal(P.weights, G.weights));
    IntMatrix W(G.rank(), G.size());
    W << G.weights.rightCols(4), G.weights.leftCols(3);  // ray order: Delta then struts
    CHECK(is_zero(IntMatrix(R.rays * W.transpose())));
  }
}

TEST_CASE("ray-map inversion without point struts") {
  auto S = test::q38917_scaffolding();
  auto R = invert_raymap(S);
  CHECK(R.rays == int_matrix({{1, 0, 0, 0, 1, 0, -3},
                              {0, 1, 0, 0, -1, 0, 1},
                              {0, 0, 1, 0, 1, 0, -2},
                              {0, 0, 0, 1, 0, -1, -1},
                              {0, 0, 0, 0, -2, 1, 3}}));
  auto L = bundles_from_shape(S, R.weights);
  auto G = R.weights;
  G.omega = to_rat(adjunction_ci(G, L));
  auto ours = select_columns(G, {"s3", "s1", "s2", "d1", "d2", "d3", "d4"});
  auto reference = make_presentation(int_matrix({{1, 0, -3, 3, -1, 2, -2}, {0, 1, 2, -1, 1, -1, 2}}), rat_vector({-2, 3}),
                                 {"s3", "s1", "s2", "d1", "d2", "d3", "d4"});
  CHECK(same_presentation(ours, L, reference, {int_vector({2, 0}), int_vector({0, 1})}));
  CHECK_FALSE(same_presentation(ours, {L[1], L[0]}, reference, {int_vector({2, 0}), int_vector({0, 1})}));
  auto E = eliminate_linear(G, L);
  CHECK(E.ambient.size() == 6);
  CHECK(E.bundles.size() == 1);
  CHECK(E.removed == std::vector<std::string>{"s1=L2"});
}

TEST_CASE("ray map must be surjective") {
  auto S = test::q38917_scaffolding();
  for (auto& s : S.struts) s.chi(0) *= 2;
  CHECK_THROWS_AS(invert_raymap(S), NonSurjectiveRayMap);
}

TEST_CASE("pfaffian ambient from struts") {
  auto R = invert_raymap(test::q33018_struts());
  auto& G = R.weights;
  // y is the fourth shape ray; the bundles are monomials in the Cox coordinates
  auto H = col(G, "d4");
  std::vector<IntVector> E = {IntVector(col(G, "d5") + col(G, "d7")), IntVector(col(G, "d4") + col(G, "d7")),
                              IntVector(col(G, "d4") + col(G, "d6")), IntVector(col(G, "d3") + col(G, "d6")),
                              IntVector(col(G, "d3") + col(G, "d5"))};
  auto el = eliminate_linear(G, {H});
  CHECK(el.bundles.empty());
  auto Y = el.ambient;
  Y.omega = to_rat(adjunction_pfaffian(Y, E));
  auto reference = test::q33018();
  auto expected = reference.ambient;
  expected.names = Y.names;
  CHECK(same_presentation(Y, E, expected, reference.equation_weights));
}

TEST_CASE("tower levels") {
  Scaffolding S;
  S.nbar_rank = 2;
  S.shape = infer_shape(int_matrix({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}}));
  S.struts = {{int_vector({1, 1, 1, 1, 1, 1}), IntVector(0)}};
  auto G = invert_raymap(S).weights;
  CHECK_THROWS_AS(bundles_from_shape(S, G), UnsupportedShape);
  S.levels = {{0, 1, 2, 3, 4, 5}};
  CHECK(bundles_from_shape(S, G).size() == 1);
}

TEST_CASE("elimination without a matching column is a no-op") {
  auto M = test::q38989();
  auto E = eliminate_linear(M.ambient, M.bundles);
  CHECK(E.removed.empty());
  CHECK(E.ambient.weights == M.ambient.weights);
  CHECK(E.ambient.omega == M.ambient.omega);
}
