#pragma once

#include "lf/git.hpp"
#include "lf/polytope.hpp"

#include <optional>
#include <vector>

namespace lf {

// Complete smooth fan of the shape Z. Rays are columns.
struct ToricShape {
  IntMatrix rays;
  std::vector<IndexSet> max_cones;

  int rank() const { return static_cast<int>(rays.rows()); }
  int size() const { return static_cast<int>(rays.cols()); }
  bool smooth() const;
};

// Rank-two shapes: cones are consecutive rays in angular order.
ToricShape infer_shape(const IntMatrix& rays);

struct Strut {
  IntVector D;    // coefficients on the shape rays
  IntVector chi;  // translation in N_U
};

struct Scaffolding {
  int nbar_rank = 0;
  int nu_rank = 0;
  std::optional<ToricShape> shape;
  std::vector<Strut> struts;
  std::vector<IndexSet> levels;       // optional partition of shape rays
  std::optional<IntMatrix> embedding;  // (nbar+u) square map into the polytope lattice
};

bool is_nef(const ToricShape& Z, const IntVector& D);
// P_D = {n : <Delta_j, n> >= -D_j}
LatticePolytope divisor_polytope(const ToricShape& Z, const IntVector& D);
LatticePolytope scaffolding_polytope(const Scaffolding& S);
bool validate_scaffolding(const Scaffolding& S, const LatticePolytope& P);

// Point-strut construction: columns s1..sr, u1..uu, d1..dz.
GitPresentation invert_pointstrut(const Scaffolding& S);

struct RayMapInversion {
  IntMatrix rays;           // (z+u) x (z+s): (Delta_i, 0) then (-D_k, chi_k)
  GitPresentation weights;  // columns s1..ss, d1..dz
};
RayMapInversion invert_raymap(const Scaffolding& S);

std::vector<IndexSet> primitive_collections(const ToricShape& Z);
// One class per tower level: the sum of the d-columns of that level.
std::vector<IntVector> bundles_from_shape(const Scaffolding& S, const GitPresentation& G);

struct Elimination {
  GitPresentation ambient;
  std::vector<IntVector> bundles;
  std::vector<std::string> removed;  // "d2=L1" style records
};

// Drops a coordinate whose weight equals a bundle, together with that bundle,
// until no such pair remains. omega is recomputed by adjunction over the
// remaining bundles (the complete-intersection rule).
Elimination eliminate_linear(const GitPresentation& G, const std::vector<IntVector>& bundles);

}  // namespace lf
