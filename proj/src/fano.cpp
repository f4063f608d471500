#include "lf/fano.hpp"

#include "lf/errors.hpp"
#include "lf/lattice.hpp"
#include "lf/lp.hpp"

#include <map>
#include <random>
#include <sstream>

namespace lf {

IntVector adjunction_ci(const GitPresentation& G, const std::vector<IntVector>& bundles) {
  IntVector k = G.anticanonical();
  for (const auto& L : bundles) k -= L;
  return k;
}

IntVector adjunction_pfaffian(const GitPresentation& G, const std::vector<IntVector>& E) {
  if (E.size() != 5) throw InputError("Pfaffian format needs five equation weights");
  IntVector s = IntVector::Zero(G.rank());
  for (const auto& e : E) s += e;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) % 2 != 0) throw InputError("sum of Pfaffian weights is not divisible by two");
  return G.anticanonical() - s / 2;
}

std::array<RatVector, 5> pfaffian_column_weights(const std::vector<IntVector>& E) {
  if (E.size() != 5) throw InputError("Pfaffian format needs five equation weights");
  RatVector quarter = RatVector::Zero(E[0].size());
  for (const auto& e : E) quarter += to_rat(e);
  quarter /= Rat(4);
  std::array<RatVector, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = quarter - to_rat(E[i]);
  return c;
}

RatVector entry_weight(const std::array<RatVector, 5>& c, int j, int k) { return c[j] + c[k]; }

std::array<Polynomial, 5> pfaffian_equations(const PolyMatrix& A) {
  std::array<Polynomial, 5> out;
  for (int i = 0; i < 5; ++i) {
    int idx[4], n = 0;
    for (int t = 0; t < 5; ++t)
      if (t != i) idx[n++] = t;
    const auto &a = A[idx[0]], &b = A[idx[1]], &c = A[idx[2]];
    out[i] = a[idx[1]] * c[idx[3]] - a[idx[2]] * b[idx[3]] + a[idx[3]] * b[idx[2]];
  }
  return out;
}

PolyMatrix build_generic_pfaffian(const PfaffianModel& model, const std::function<Rat(size_t)>& coeff) {
  const auto& G = model.ambient;
  const int m = G.size();
  auto c = pfaffian_column_weights(model.equation_weights);
  PolyMatrix A;
  for (auto& row : A)
    for (auto& x : row) x = Polynomial(m);
  size_t counter = 0;
  for (int j = 0; j < 5; ++j)
    for (int k = j + 1; k < 5; ++k) {
      RatVector w = entry_weight(c, j, k);
      bool integral = true;
      IntVector wi(w.size());
      for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (!is_integral(w(i))) integral = false;
        else wi(i) = numerator(w(i));
      }
      if (!integral) continue;
      auto basis = monomial_basis(G, wi);
      size_t base = counter;
      A[j][k] = section(basis, m, coeff ? std::function<Rat(size_t)>([&](size_t t) { return coeff(base + t); })
                                        : std::function<Rat(size_t)>());
      counter += basis.size();
      A[k][j] = -A[j][k];
    }
  return A;
}

EquationSystem equation_system(const CiModel& model, const std::function<Rat(size_t)>& coeff) {
  EquationSystem X;
  const int m = model.ambient.size();
  size_t counter = 0;
  for (const auto& L : model.bundles) {
    auto basis = monomial_basis(model.ambient, L);
    size_t base = counter;
    X.equations.push_back(section(basis, m,
                                  coeff ? std::function<Rat(size_t)>([&](size_t t) { return coeff(base + t); })
                                        : std::function<Rat(size_t)>()));
    X.characters.push_back(L);
    counter += basis.size();
  }
  return X;
}

EquationSystem equation_system(const PfaffianModel& model, const std::function<Rat(size_t)>& coeff) {
  EquationSystem X;
  auto A = build_generic_pfaffian(model, coeff);
  auto P = pfaffian_equations(A);
  for (int i = 0; i < 5; ++i) {
    X.equations.push_back(P[i]);
    X.characters.push_back(model.equation_weights[i]);
  }
  // where a_jk is a unit the ideal is generated by the three Pfaffians avoiding j and k
  for (int j = 0; j < 5; ++j)
    for (int k = j + 1; k < 5; ++k) {
      if (A[j][k].is_zero()) continue;
      LocalChart lc{A[j][k], {}};
      for (size_t i = 0; i < 5; ++i)
        if (static_cast<int>(i) != j && static_cast<int>(i) != k) lc.equations.push_back(i);
      X.local.push_back(std::move(lc));
    }
  return X;
}

namespace {

Int factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<Int> quantum_period_ci(const CiModel& model, int K) {
  const auto& G = model.ambient;
  const int r = G.rank(), m = G.size();
  const IntVector A = adjunction_ci(G, model.bundles);
  // box around the slice {D_i.l >= 0, A.l = 1}
  std::vector<Rat> lo(r), hi(r);
  for (int i = 0; i < r; ++i)
    for (int sgn : {1, -1}) {
      LinearProgram lp(r);
      for (int t = 0; t < r; ++t) lp.free_var[t] = true;
      for (int j = 0; j < m; ++j) lp.add(to_rat(G.column(j)), Relation::GreaterEqual, Rat(0));
      lp.add(to_rat(A), Relation::Equal, Rat(1));
      lp.c = RatVector::Zero(r);
      lp.c(i) = Rat(sgn);
      auto res = solve_lp(lp);
      if (res.status == LpStatus::Unbounded)
        throw UnboundedEnumeration("anticanonical grading is not proper on the effective classes");
      if (res.status == LpStatus::Infeasible) {
        lo[i] = hi[i] = 0;
        continue;
      }
      (sgn > 0 ? hi[i] : lo[i]) = res.x(i);
    }
  std::vector<Int> out;
  for (int d = 0; d <= K; ++d) {
    Rat sum = 0;
    IntVector l(r), lmin(r), lmax(r);
    for (int i = 0; i < r; ++i) {
      lmin(i) = ceil(lo[i] * d);
      lmax(i) = floor(hi[i] * d);
    }
    bool empty = false;
    for (int i = 0; i < r; ++i)
      if (lmin(i) > lmax(i)) empty = true;
    if (!empty) {
      l = lmin;
      for (;;) {
        if (A.dot(l) == d) {
          bool ok = true;
          Rat term = 1;
          for (int j = 0; j < m && ok; ++j) {
            Int v = G.column(j).dot(l);
            if (v < 0) ok = false;
            else term /= Rat(factorial(v.convert_to<long>()));
          }
          for (const auto& L : model.bundles) {
            Int v = L.dot(l);
            if (v < 0) ok = false;
            else if (ok) term *= Rat(factorial(v.convert_to<long>()));
          }
          if (ok) sum += term;
        }
        int i = 0;
        while (i < r && l(i) == lmax(i)) l(i) = lmin(i), ++i;
        if (i == r) break;
        l(i) += 1;
      }
    }
    Rat p = sum * Rat(factorial(d));
    if (!is_integral(p)) throw Error("quantum period coefficient is not integral");
    out.push_back(numerator(p));
  }
  return out;
}

int fano_index(const std::vector<Int>& period) {
  const int K = static_cast<int>(period.size()) - 1;
  for (int r = std::max(K, 1); r >= 1; --r) {
    bool ok = true;
    for (int k = 1; k <= K && ok; ++k)
      if (k % r != 0 && period[k] != 0) ok = false;
    if (ok) return r;
  }
  return 1;
}

size_t Basket::total() const {
  size_t t = 0;
  for (const auto& [l, n] : points) t += n;
  return t;
}

std::string Basket::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < points.size(); ++i) {
    if (i) os << ", ";
    if (points[i].second > 1) os << points[i].second << "x";
    os << points[i].first;
  }
  os << "}";
  return os.str();
}

Basket basket(const GitPresentation& G, const EquationSystem& X) {
  Basket b;
  std::map<std::string, size_t> counts;
  for (const auto& st : singular_strata(G, G.size())) {
    std::string where = st.describe(G);
    StratumReport rep;
    try {
      rep = stratum_solutions(G, X, st);
    } catch (const TooManyVariables& e) {
      b.warnings.push_back(where + ": " + e.what());
      continue;
    }
    switch (rep.outcome) {
      case StratumOutcome::Empty:
        b.details.push_back(where + ": X misses it");
        break;
      case StratumOutcome::PositiveDimensional:
        b.warnings.push_back(where + ": " + rep.note);
        break;
      case StratumOutcome::Unverified:
        b.warnings.push_back(where + ": " + rep.note);
        break;
      case StratumOutcome::Points: {
        std::ostringstream os;
        os << where << ": " << rep.points << " point(s) via " << chart_name(rep.chart);
        if (rep.type) os << " of type " << rep.type->label();
        if (rep.transversal) os << ", transversal";
        b.details.push_back(os.str());
        if (!rep.note.empty()) b.warnings.push_back(where + ": " + rep.note);
        if (!rep.type || rep.type->order == 1) break;
        bool isolated = std::none_of(rep.type->weights.begin(), rep.type->weights.end(),
                                     [](const Int& w) { return w == 0; });
        if (!isolated) b.warnings.push_back(where + ": non-isolated quotient singularity " + rep.type->label());
        counts[rep.type->label()] += rep.points;
        break;
      }
    }
  }
  b.points.assign(counts.begin(), counts.end());
  return b;
}

namespace {

std::function<Rat(size_t)> random_coefficients(unsigned seed) {
  auto table = std::make_shared<std::vector<long>>();
  auto rng = std::make_shared<std::mt19937>(seed);
  return [table, rng](size_t k) {
    std::uniform_int_distribution<long> d(1, 9);
    while (table->size() <= k) table->push_back(d(*rng));
    return Rat((*table)[k]);
  };
}

}  // namespace

BasketReport basket_report(const CiModel& model, unsigned seed) {
  return {basket(model.ambient, equation_system(model)),
          basket(model.ambient, equation_system(model, random_coefficients(seed)))};
}

BasketReport basket_report(const PfaffianModel& model, unsigned seed) {
  return {basket(model.ambient, equation_system(model)),
          basket(model.ambient, equation_system(model, random_coefficients(seed)))};
}

}  // namespace lf
