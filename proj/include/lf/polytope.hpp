#pragma once

#include "lf/scalar.hpp"

#include <vector>

namespace lf {

// normal . x >= offset (or == offset for affine-hull equations)
struct Facet {
  IntVector normal;
  Int offset;
};

struct LatticePolytope {
  int ambient_rank = 0;
  int dim = -1;                    // -1 for the empty polytope
  std::vector<IntVector> vertices;  // lexicographically sorted
  std::vector<Facet> facets;        // relative facets if lower-dimensional
  std::vector<Facet> equations;     // affine hull; empty when full-dimensional

  bool full_dimensional() const { return dim == ambient_rank; }
  bool contains(const IntVector& p) const;
  bool strictly_inside(const IntVector& p) const;  // relative interior
};

LatticePolytope convex_hull(const std::vector<IntVector>& points);
std::vector<IntVector> lattice_points(const LatticePolytope& P);
LatticePolytope transform(const LatticePolytope& P, const IntMatrix& U);
bool same_polytope(const LatticePolytope& P, const LatticePolytope& Q);

struct FanoClass {
  bool fano = false;
  bool canonical = false;
  bool terminal = false;
};
FanoClass classify_fano_polytope(const LatticePolytope& P);

// Canonical representative of the GL(N,Z)-orbit of P: the column-major
// lexicographically least Hermite form of the vertex matrix over all vertex
// orderings.
IntMatrix affine_normal_form(const LatticePolytope& P);

struct RationalCone {
  std::vector<RatVector> generators;
  int ambient_rank = 0;
};

bool cone_contains(const RationalCone& C, const RatVector& p);
bool relint_contains(const RationalCone& C, const RatVector& p);

}  // namespace lf
