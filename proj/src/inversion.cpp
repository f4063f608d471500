#include "lf/inversion.hpp"

#include "lf/errors.hpp"
#include "lf/fano.hpp"
#include "lf/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace lf {

namespace {

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void check_strut_sizes(const Scaffolding& S) {
  for (const auto& s : S.struts) {
    if (S.shape && s.D.size() != S.shape->size()) throw InputError("strut divisor has the wrong length");
    if (s.chi.size() != S.nu_rank) throw InputError("strut translation has the wrong length");
  }
  if (S.struts.empty()) throw InputError("scaffolding has no struts");
}

const ToricShape& require_shape(const Scaffolding& S) {
  if (!S.shape) throw InputError("scaffolding has no shape");
  return *S.shape;
}

std::vector<std::string> names(const std::string& p, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(p + std::to_string(i));
  return out;
}

}  // namespace

bool ToricShape::smooth() const {
  for (const auto& c : max_cones)
    if (static_cast<int>(c.size()) != rank() || abs(determinant(columns(rays, c))) != 1) return false;
  return true;
}

ToricShape infer_shape(const IntMatrix& rays) {
  if (rays.rows() != 2) throw UnsupportedShape("only rank-two shapes can be inferred from rays");
  const int n = static_cast<int>(rays.cols());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto angle = [&](int i) { return std::atan2(rays(1, i).convert_to<double>(), rays(0, i).convert_to<double>()); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return angle(a) < angle(b); });
  ToricShape Z{rays, {}};
  for (int k = 0; k < n; ++k) {
    IndexSet c{order[k], order[(k + 1) % n]};
    std::sort(c.begin(), c.end());
    Z.max_cones.push_back(c);
  }
  if (!Z.smooth()) throw UnsupportedShape("inferred shape fan is not smooth");
  return Z;
}

namespace {

// vertex of P_D on cone c: <Delta_i, n> = -D_i for i in c
IntVector cone_vertex(const ToricShape& Z, const IndexSet& c, const IntVector& D) {
  IntMatrix A(Z.rank(), Z.rank());
  RatVector b(Z.rank());
  for (int k = 0; k < Z.rank(); ++k) {
    A.row(k) = Z.rays.col(c[k]).transpose();
    b(k) = Rat(-D(c[k]));
  }
  auto x = solve(RatMatrix(A.cast<Rat>()), b);
  if (!x) throw InputError("shape cone is degenerate");
  IntVector v(Z.rank());
  for (int k = 0; k < Z.rank(); ++k) {
    if (!is_integral((*x)(k))) throw InputError("shape cone is not unimodular");
    v(k) = numerator((*x)(k));
  }
  return v;
}

}  // namespace

bool is_nef(const ToricShape& Z, const IntVector& D) {
  for (const auto& c : Z.max_cones) {
    IntVector v = cone_vertex(Z, c, D);
    for (int j = 0; j < Z.size(); ++j)
      if (IntVector(Z.rays.col(j)).dot(v) < -D(j)) return false;
  }
  return true;
}

LatticePolytope divisor_polytope(const ToricShape& Z, const IntVector& D) {
  if (D.size() != Z.size()) throw InputError("divisor has the wrong length");
  if (!is_nef(Z, D)) throw InputError("strut divisor is not nef");
  std::vector<IntVector> pts;
  for (const auto& c : Z.max_cones) pts.push_back(cone_vertex(Z, c, D));
  return convex_hull(pts);
}

LatticePolytope scaffolding_polytope(const Scaffolding& S) {
  check_strut_sizes(S);
  const ToricShape& Z = require_shape(S);
  if (Z.rank() != S.nbar_rank) throw InputError("shape rank differs from nbar_rank");
  const int n = S.nbar_rank + S.nu_rank;
  std::vector<IntVector> pts;
  for (const auto& s : S.struts)
    for (const auto& v : divisor_polytope(Z, s.D).vertices) {
      IntVector p(n);
      p << v, s.chi;
      pts.push_back(S.embedding ? IntVector(*S.embedding * p) : p);
    }
  return convex_hull(pts);
}

bool validate_scaffolding(const Scaffolding& S, const LatticePolytope& P) {
  if (S.embedding && (S.embedding->rows() != S.nbar_rank + S.nu_rank || !is_unimodular(*S.embedding)))
    throw InputError("embedding must be a unimodular square matrix");
  return same_polytope(scaffolding_polytope(S), P);
}

GitPresentation invert_pointstrut(const Scaffolding& S) {
  check_strut_sizes(S);
  const int u = S.nu_rank;
  std::vector<const Strut*> points, others;
  for (const auto& s : S.struts) (is_zero(s.D) && points.size() < static_cast<size_t>(u) ? points : others).push_back(&s);
  if (static_cast<int>(points.size()) != u) throw MissingPointStruts("need one point strut per N_U direction");
  IntMatrix B(u, u);
  for (int j = 0; j < u; ++j) B.col(j) = points[j]->chi;
  if (u > 0 && !is_unimodular(B)) throw MissingPointStruts("point struts do not form a basis of N_U");
  const int r = static_cast<int>(others.size());
  const int z = static_cast<int>(others.empty() ? 0 : others[0]->D.size());
  IntMatrix W = IntMatrix::Zero(r, r + u + z);
  for (int i = 0; i < r; ++i) {
    W(i, i) = 1;
    if (u > 0) {
      auto c = solve(RatMatrix(B.cast<Rat>()), to_rat(others[i]->chi));
      for (int j = 0; j < u; ++j) W(i, r + j) = -numerator((*c)(j));
    }
    for (int j = 0; j < z; ++j) W(i, r + u + j) = others[i]->D(j);
  }
  auto nm = names("s", r);
  for (auto& x : names("u", u)) nm.push_back(x);
  for (auto& x : names("d", z)) nm.push_back(x);
  RatVector omega = RatVector::Zero(r);
  for (int i = 0; i < r; ++i) omega += to_rat(IntVector(W.col(i)));
  return make_presentation(W, omega, nm);
}

RayMapInversion invert_raymap(const Scaffolding& S) {
  check_strut_sizes(S);
  const int z = static_cast<int>(S.struts[0].D.size()), u = S.nu_rank, s = static_cast<int>(S.struts.size());
  IntMatrix R = IntMatrix::Zero(z + u, z + s);
  R.topLeftCorner(z, z) = IntMatrix::Identity(z, z);
  for (int k = 0; k < s; ++k) {
    R.block(0, z + k, z, 1) = -S.struts[k].D;
    if (u > 0) R.block(z, z + k, u, 1) = S.struts[k].chi;
  }
  if (rank(R) != z + u || product(elementary_divisors(R)) != 1)
    throw NonSurjectiveRayMap("rays do not generate the lattice");
  IntMatrix K = kernel_basis(R);
  // struts first, then shape rays
  IntMatrix W(K.rows(), K.cols());
  W << K.rightCols(s), K.leftCols(z);
  auto nm = names("s", s);
  for (auto& x : names("d", z)) nm.push_back(x);
  RatVector omega = RatVector::Zero(W.rows());
  for (int i = 0; i < s; ++i) omega += to_rat(IntVector(W.col(i)));
  return {R, make_presentation(W, omega, nm)};
}

std::vector<IndexSet> primitive_collections(const ToricShape& Z) {
  std::vector<IndexSet> out;
  const int n = Z.size();
  auto face = [&](const IndexSet& C) {
    return std::any_of(Z.max_cones.begin(), Z.max_cones.end(), [&](const IndexSet& c) { return subset(C, c); });
  };
  for (int k = 1; k <= n; ++k)
    for_each_subset(n, k, [&](const IndexSet& C) {
      for (const auto& p : out)
        if (subset(p, C)) return;
      if (!face(C)) out.push_back(C);
    });
  return out;
}

std::vector<IntVector> bundles_from_shape(const Scaffolding& S, const GitPresentation& G) {
  std::vector<IndexSet> levels = S.levels;
  const ToricShape& Z = require_shape(S);
  if (levels.empty()) {
    // a projective-bundle tower has pairwise disjoint primitive collections covering the rays
    levels = primitive_collections(Z);
    std::vector<int> seen(Z.size(), 0);
    for (const auto& p : levels)
      for (int i : p) ++seen[i];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
      throw UnsupportedShape("shape is not a tower of projective bundles; give the levels explicitly");
  }
  const int offset = G.size() - Z.size();
  if (offset < 0) throw InputError("presentation has fewer columns than the shape has rays");
  std::vector<IntVector> out;
  for (const auto& lvl : levels) {
    IntVector L = IntVector::Zero(G.rank());
    for (int i : lvl) L += G.column(offset + i);
    out.push_back(L);
  }
  return out;
}

Elimination eliminate_linear(const GitPresentation& G, const std::vector<IntVector>& bundles) {
  Elimination e{G, bundles, {}};
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < e.ambient.size() && !changed; ++i)
      for (size_t j = 0; j < e.bundles.size() && !changed; ++j) {
        if (e.ambient.column(i) != e.bundles[j]) continue;
        std::vector<int> keep;
        for (int k = 0; k < e.ambient.size(); ++k)
          if (k != i) keep.push_back(k);
        IntMatrix W = columns(e.ambient.weights, keep);
        if (rank(W) != e.ambient.rank()) continue;
        std::vector<std::string> nm;
        for (int k : keep) nm.push_back(e.ambient.name(k));
        e.removed.push_back(e.ambient.name(i) + "=L" + std::to_string(j + 1));
        e.bundles.erase(e.bundles.begin() + static_cast<long>(j));
        e.ambient = make_presentation(W, e.ambient.omega, nm);
        changed = true;
      }
  }
  if (e.removed.empty()) return e;
  IntVector k = e.ambient.anticanonical();
  for (const auto& L : e.bundles) k -= L;
  e.ambient.omega = to_rat(k);
  return e;
}

}  // namespace lf
