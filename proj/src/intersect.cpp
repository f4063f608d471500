#include "lf/intersect.hpp"

#include "lf/errors.hpp"
#include "lf/lattice.hpp"

#include <algorithm>

namespace lf {

namespace {

bool disjoint(const IndexSet& a, const IndexSet& b) {
  for (int i : a)
    if (std::binary_search(b.begin(), b.end(), i)) return false;
  return true;
}

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

GitPresentation simplicial(const GitPresentation& G) { return is_generic(G) ? G : perturb_stability(G); }

}  // namespace

ToricIntersection::ToricIntersection(const GitPresentation& G) : G_(G), dim_(G.size() - G.rank()) {
  if (rank(G.weights) != G.rank()) throw InputError("weight matrix must have full row rank");
  auto cones = charts(G);
  for (const auto& c : cones)
    if (c.kind == ChartKind::NonQFactorial || static_cast<int>(c.indices.size()) != G.rank())
      throw NonSimplicialStability("stability condition is not in the interior of a chamber");
  if (cones.empty()) throw InputError("empty semistable locus");
  kernel_order_ = product(elementary_divisors(G.weights));
  reference_ = cones.front().indices;

  // C is a face iff it avoids some chart
  const int m = G.size();
  auto face = [&](const IndexSet& C) {
    return std::any_of(cones.begin(), cones.end(), [&](const Chart& c) { return disjoint(C, c.indices); });
  };
  for (int k = 1; k <= m; ++k)
    for_each_subset(m, k, [&](const IndexSet& C) {
      for (const auto& p : primitive_)
        if (subset(p, C)) return;
      if (!face(C)) primitive_.push_back(C);
    });

  std::vector<Polynomial> gens;
  for (const auto& C : primitive_) {
    Polynomial p = Polynomial::constant(G.rank(), 1);
    for (int i : C) p = p * divisor(i);
    gens.push_back(p);
  }
  basis_ = groebner_basis(gens);
  Polynomial ref = normal_form(chart_class(reference_), basis_);
  if (ref.size() != 1) throw Error("top graded piece of the Chow ring is not one-dimensional");
  top_monomial_ = ref.leading_exponent();
  reference_value_ = ref.leading_coefficient();
}

Polynomial ToricIntersection::linear(const RatVector& cls) const {
  if (cls.size() != G_.rank()) throw InputError("class has the wrong rank");
  Polynomial p(G_.rank());
  for (int k = 0; k < G_.rank(); ++k) p += Polynomial::variable(G_.rank(), k) * cls(k);
  return p;
}

Polynomial ToricIntersection::chart_class(const IndexSet& S) const {
  Polynomial p = Polynomial::constant(G_.rank(), 1);
  for (int j : complement(S, G_.size())) p = p * divisor(j);
  return p;
}

Int ToricIntersection::multiplicity(const IndexSet& S) const {
  return abs(determinant(columns(G_.weights, S))) / kernel_order_;
}

Rat ToricIntersection::degree(const Polynomial& p) const {
  for (const auto& [e, c] : p.terms()) {
    long d = 0;
    for (long x : e) d += x;
    if (d != dim_) throw InputError("class is not of top degree");
  }
  Polynomial nf = normal_form(p, basis_);
  if (nf.is_zero()) return 0;
  if (nf.size() != 1 || nf.leading_exponent() != top_monomial_) throw Error("normal form left the top graded piece");
  return nf.leading_coefficient() / reference_value_ / Rat(multiplicity(reference_));
}

Rat ToricIntersection::top_intersection(const std::vector<RatVector>& classes) const {
  if (static_cast<int>(classes.size()) != dim_) throw InputError("need exactly dim Y classes");
  Polynomial p = Polynomial::constant(G_.rank(), 1);
  for (const auto& c : classes) p = p * linear(c);
  return degree(p);
}

Rat degree_ci(const CiModel& model) {
  ToricIntersection T(simplicial(model.ambient));
  if (T.dimension() != 3 + static_cast<int>(model.bundles.size()))
    throw InputError("complete intersection is not a threefold");
  Polynomial k = T.linear(adjunction_ci(model.ambient, model.bundles));
  Polynomial p = pow(k, 3);
  for (const auto& L : model.bundles) p = p * T.linear(L);
  return T.degree(p);
}

std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& roots, int k) {
  const int n = roots.empty() ? 0 : roots[0].nvars();
  std::vector<Polynomial> e(k + 1, Polynomial(n));
  e[0] = Polynomial::constant(n, 1);
  for (const auto& x : roots)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e;
}

PfaffianDegree degree_pfaffian(const PfaffianModel& model) {
  const GitPresentation Y = simplicial(model.ambient);
  ToricIntersection T(Y);
  if (T.dimension() != 6) throw InputError("Pfaffian locus is not a threefold");
  auto c = pfaffian_column_weights(model.equation_weights);
  std::vector<Polynomial> roots;
  for (const auto& ci : c) roots.push_back(T.linear(ci));
  auto e = elementary_symmetric(roots, 3);
  Polynomial cls = e[1] * e[2] - e[3];
  Polynomial k = T.linear(adjunction_pfaffian(model.ambient, model.equation_weights));
  PfaffianDegree out;
  Polynomial top = pow(k, 3) * cls;
  out.degree = T.degree(top);
  auto cs = charts(Y);
  auto smooth = std::find_if(cs.begin(), cs.end(), [](const Chart& ch) { return ch.kind == ChartKind::Smooth; });
  out.normalizer = smooth != cs.end() ? smooth->indices : cs.front().indices;
  out.ratio = out.degree / T.degree(T.chart_class(out.normalizer));
  return out;
}

}  // namespace lf
