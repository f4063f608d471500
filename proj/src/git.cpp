#include "lf/git.hpp"

#include "lf/errors.hpp"
#include "lf/lattice.hpp"
#include "lf/lp.hpp"
#include "lf/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lf {

std::string GitPresentation::name(int i) const {
  return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
}

IntVector GitPresentation::anticanonical() const { return weights.rowwise().sum(); }

GitPresentation make_presentation(IntMatrix weights, RatVector omega, std::vector<std::string> names) {
  if (omega.size() != weights.rows()) throw InputError("stability condition has the wrong length");
  if (!names.empty() && static_cast<Eigen::Index>(names.size()) != weights.cols())
    throw InputError("one name per column expected");
  GitPresentation G{std::move(weights), std::move(omega), std::move(names)};
  if (G.names.empty())
    for (int i = 0; i < G.size(); ++i) G.names.push_back("x" + std::to_string(i + 1));
  return G;
}

GitPresentation select_columns(const GitPresentation& G, const std::vector<std::string>& names) {
  IndexSet idx;
  for (const auto& n : names) {
    auto it = std::find(G.names.begin(), G.names.end(), n);
    if (it == G.names.end()) throw InputError("no column named " + n);
    idx.push_back(static_cast<int>(it - G.names.begin()));
  }
  return make_presentation(columns(G.weights, idx), G.omega, names);
}

bool same_presentation(const GitPresentation& A, const std::vector<IntVector>& LA, const GitPresentation& B,
                       const std::vector<IntVector>& LB) {
  if (A.rank() != B.rank() || A.size() != B.size() || LA.size() != LB.size()) return false;
  Int den = 1;
  for (const auto* w : {&A.omega, &B.omega})
    for (Eigen::Index i = 0; i < w->size(); ++i) den = boost::multiprecision::lcm(den, denominator((*w)(i)));
  auto augmented = [&](const GitPresentation& G, const std::vector<IntVector>& L) {
    IntMatrix M(G.rank(), G.size() + static_cast<Eigen::Index>(L.size()) + 1);
    M.leftCols(G.size()) = G.weights;
    for (size_t j = 0; j < L.size(); ++j) M.col(G.size() + static_cast<Eigen::Index>(j)) = L[j];
    for (int i = 0; i < G.rank(); ++i) M(i, M.cols() - 1) = numerator(G.omega(i) * Rat(den));
    return M;
  };
  return row_lattice_equal(augmented(A, LA), augmented(B, LB));
}

std::string chart_name(const IndexSet& s) {
  bool wide = std::any_of(s.begin(), s.end(), [](int i) { return i >= 9; });
  std::string out = "U";
  if (wide) out += "{";
  for (size_t k = 0; k < s.size(); ++k) {
    if (wide && k) out += ",";
    out += std::to_string(s[k] + 1);
  }
  if (wide) out += "}";
  return out;
}

IndexSet complement(const IndexSet& s, int m) {
  IndexSet c;
  for (int i = 0; i < m; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) c.push_back(i);
  return c;
}

IntMatrix columns(const IntMatrix& w, const IndexSet& s) {
  IntMatrix out(w.rows(), static_cast<Eigen::Index>(s.size()));
  for (size_t k = 0; k < s.size(); ++k) out.col(k) = w.col(s[k]);
  return out;
}

namespace {

bool subset_of(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Int mod(const Int& a, const Int& n) {
  Int r = a % n;
  return r < 0 ? Int(r + n) : r;
}

}  // namespace

std::string QuotientType::label() const {
  std::ostringstream os;
  os << "1/" << order.str() << "(";
  for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i].str();
  os << ")";
  return os.str();
}

QuotientType normalize_cyclic(const Int& n, std::vector<Int> w, bool sort_weights) {
  QuotientType best{n, {}};
  if (n == 1) {
    best.weights.assign(w.size(), Int(0));
    return best;
  }
  bool have = false;
  for (Int u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    std::vector<Int> c;
    for (const auto& x : w) c.push_back(mod(u * x, n));
    if (sort_weights) std::sort(c.begin(), c.end());
    if (!have || c < best.weights) best.weights = c, have = true;
  }
  return best;
}

std::string Chart::describe(const GitPresentation& G) const {
  std::string s = chart_name(indices) + " ";
  switch (kind) {
    case ChartKind::Smooth:
      return s + "smooth";
    case ChartKind::NonQFactorial:
      return s + "non-Q-factorial";
    case ChartKind::NonCyclic: {
      s += "non-cyclic group";
      for (const auto& g : group) s += " Z/" + g.str();
      return s;
    }
    case ChartKind::Cyclic:
      break;
  }
  s += type.label() + "_";
  for (int c : coordinates) s += G.name(c);
  return s;
}

Chart classify_chart(const GitPresentation& G, const IndexSet& s) {
  const int r = G.rank();
  Chart ch;
  ch.indices = s;
  ch.coordinates = complement(s, G.size());
  IntMatrix D = columns(G.weights, s);
  if (static_cast<int>(s.size()) != r || rank(D) < r) {
    ch.kind = ChartKind::NonQFactorial;
    return ch;
  }
  auto sf = smith_normal_form<Int>(D);
  for (int i = 0; i < r; ++i)
    if (sf.S(i, i) != 1) ch.group.push_back(sf.S(i, i));
  if (ch.group.empty()) {
    ch.kind = ChartKind::Smooth;
    ch.type = normalize_cyclic(1, std::vector<Int>(ch.coordinates.size()), false);
    return ch;
  }
  if (ch.group.size() > 1) {
    ch.kind = ChartKind::NonCyclic;
    return ch;
  }
  ch.kind = ChartKind::Cyclic;
  const Int n = ch.group.back();
  std::vector<Int> w;
  for (int j : ch.coordinates) w.push_back(mod((sf.U * G.column(j))(r - 1), n));
  ch.type = normalize_cyclic(n, w, false);
  return ch;
}

std::vector<Chart> charts(const GitPresentation& G) {
  const int m = G.size();
  if (m > 20) throw ResourceLimit("chart enumeration limited to 20 columns");
  std::vector<IndexSet> found;
  std::vector<Chart> out;
  RatMatrix Wq = to_rat(G.weights);
  for (int k = 1; k <= m; ++k)
    for_each_subset(m, k, [&](const IndexSet& s) {
      for (const auto& f : found)
        if (subset_of(f, s)) return;
      RationalCone C;
      C.ambient_rank = G.rank();
      for (int i : s) C.generators.push_back(Wq.col(i));
      if (!relint_contains(C, G.omega)) return;
      found.push_back(s);
      out.push_back(classify_chart(G, s));
    });
  return out;
}

std::string TorusStratum::describe(const GitPresentation& G) const {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < zeros.size(); ++k) os << (k ? "=" : "") << G.name(zeros[k]);
  os << "=0} dim " << dim;
  if (!finite_stabilizer) os << ", positive-dimensional stabilizer";
  else os << ", stabilizer order " << stabilizer.str();
  if (!orbifold) os << ", non-Q-factorial";
  os << ", charts";
  for (const auto& c : charts) os << " " << chart_name(c);
  return os.str();
}

std::vector<TorusStratum> strata(const GitPresentation& G) {
  const int m = G.size(), r = G.rank();
  auto cs = charts(G);
  std::vector<TorusStratum> out;
  for (int k = 0; k <= m; ++k)
    for_each_subset(m, k, [&](const IndexSet& T) {
      IndexSet Tc = complement(T, m);
      TorusStratum st;
      st.zeros = T;
      st.orbifold = false;
      for (const auto& c : cs)
        if (subset_of(c.indices, Tc)) {
          st.charts.push_back(c.indices);
          if (c.orbifold()) st.orbifold = true;
        }
      if (st.charts.empty()) return;
      IntMatrix D = columns(G.weights, Tc);
      const int rk = static_cast<int>(rank(D));
      st.dim = static_cast<int>(Tc.size()) - rk;
      st.finite_stabilizer = rk == r;
      st.stabilizer = st.finite_stabilizer ? product(elementary_divisors(D)) : Int(0);
      out.push_back(std::move(st));
    });
  return out;
}

std::vector<TorusStratum> singular_strata(const GitPresentation& G, int max_dim) {
  std::vector<TorusStratum> out;
  for (auto& s : strata(G))
    if (s.singular() && s.dim <= max_dim) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(),
                   [](const TorusStratum& a, const TorusStratum& b) { return a.dim > b.dim; });
  return out;
}

bool in_closure(const TorusStratum& a, const TorusStratum& b) { return subset_of(b.zeros, a.zeros); }

IntMatrix gale_dual(const GitPresentation& G) { return kernel_basis<Int>(G.weights); }

namespace {

std::vector<IntVector> walls(const GitPresentation& G) {
  const int r = G.rank();
  std::set<IntVector, IntVectorLess> out;
  if (r < 2) return {};
  for_each_subset(G.size(), r - 1, [&](const IndexSet& s) {
    IntMatrix D = columns(G.weights, s);
    if (rank(D) != r - 1) return;
    IntMatrix h = kernel_basis<Int>(IntMatrix(D.transpose()));
    IntVector v = h.row(0).transpose();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) {
        if (v(i) < 0) v = -v;
        break;
      }
    out.insert(v);
  });
  return {out.begin(), out.end()};
}

Rat dot(const IntVector& h, const RatVector& w) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < h.size(); ++i) s += Rat(h(i)) * w(i);
  return s;
}

}  // namespace

bool is_generic(const GitPresentation& G) {
  if (G.rank() == 1) return G.omega(0) != 0;
  for (const auto& h : walls(G))
    if (dot(h, G.omega) == 0) return false;
  return true;
}

std::vector<IndexSet> fan_from_git(const GitPresentation& G) {
  if (!is_generic(G)) throw NonSimplicialStability("stability condition lies on a wall of the secondary fan");
  std::vector<IndexSet> cones;
  for (const auto& c : charts(G)) {
    if (c.kind == ChartKind::NonQFactorial) throw NonSimplicialStability("non-simplicial chart " + chart_name(c.indices));
    cones.push_back(complement(c.indices, G.size()));
  }
  std::sort(cones.begin(), cones.end());
  return cones;
}

GitPresentation perturb_stability(const GitPresentation& G) {
  if (G.rank() == 1 || is_generic(G)) return G;
  const int r = G.rank();
  auto ws = walls(G);
  auto good = [&](const RatVector& v) {
    for (const auto& h : ws)
      if (dot(h, G.omega) == 0 && dot(h, v) == 0) return false;
    return true;
  };
  RatVector v(r);
  for (int i = 0; i < r; ++i) v(i) = Rat(1, i + 1);
  for (long t = 3; !good(v); t += 2) {
    Rat p = 1;
    for (int i = 0; i < r; ++i, p /= t) v(i) = p;
  }
  Rat eps(1, 1000);
  for (const auto& h : ws) {
    Rat a = dot(h, G.omega), b = dot(h, v);
    if (a == 0 || b == 0 || (a > 0) == (b > 0)) continue;
    Rat limit = -(a / b);
    if (limit / 2 < eps) eps = limit / 2;
  }
  GitPresentation out = G;
  out.omega = G.omega + eps * v;
  return out;
}

std::vector<IntVector> monomial_basis(const GitPresentation& G, const IntVector& lambda) {
  const int r = G.rank(), m = G.size();
  if (lambda.size() != r) throw InputError("weight vector has the wrong length");
  // a grading positive on every column exists iff the column cone is strictly convex
  LinearProgram lp(r);
  for (int i = 0; i < r; ++i) lp.free_var[i] = true;
  for (int j = 0; j < m; ++j) lp.add(to_rat(G.column(j)), Relation::GreaterEqual, Rat(1));
  lp.c = RatVector::Zero(r);
  auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) throw InfiniteBasis("column cone is not strictly convex");
  Int den = 1;
  for (int i = 0; i < r; ++i) den = den / gcd(den, denominator(res.x(i))) * denominator(res.x(i));
  IntVector phi(r);
  for (int i = 0; i < r; ++i) phi(i) = numerator(res.x(i) * Rat(den));
  std::vector<Int> g(m);
  for (int j = 0; j < m; ++j) g[j] = phi.dot(G.column(j));
  Int budget = phi.dot(lambda);
  std::vector<IntVector> out;
  if (budget < 0) return out;
  IntVector a = IntVector::Zero(m);
  std::function<void(int, const Int&)> rec = [&](int j, const Int& left) {
    if (j == m) {
      if (left == 0 && G.weights * a == lambda) out.push_back(a);
      return;
    }
    for (Int k = 0; k * g[j] <= left; ++k) {
      a(j) = k;
      rec(j + 1, left - k * g[j]);
    }
    a(j) = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end(), IntVectorLess());
  return out;
}

Polynomial section(const std::vector<IntVector>& monomials, int m, const std::function<Rat(size_t)>& coeff) {
  Polynomial p(m);
  for (size_t k = 0; k < monomials.size(); ++k) p.add_term(to_exponent(monomials[k]), coeff ? coeff(k) : Rat(1));
  return p;
}

Polynomial restrict_to_stratum(const Polynomial& f, const IndexSet& zeros) {
  Polynomial p = f;
  for (int i : zeros) p = p.substitute(i, 0);
  return p;
}

StratumReport stratum_solutions(const GitPresentation& G, const EquationSystem& X, const TorusStratum& T,
                                int max_free) {
  const int m = G.size(), r = G.rank();
  StratumReport rep;
  const IndexSet Tc = complement(T.zeros, m);
  const IntMatrix DTc = columns(G.weights, Tc);
  const int k = static_cast<int>(rank(DTc));
  const Int cov = product(elementary_divisors(DTc));

  // slice x_S = 1, preferring the chart whose group equals the generic stabilizer
  std::optional<IndexSet> best;
  Int best_index = 0;
  for_each_subset(static_cast<int>(Tc.size()), k, [&](const IndexSet& pos) {
    IndexSet S;
    for (int p : pos) S.push_back(Tc[p]);
    IntMatrix DS = columns(G.weights, S);
    if (rank(DS) != k) return;
    Int idx = product(elementary_divisors(DS)) / cov;
    if (!best || idx < best_index) best = S, best_index = idx;
  });
  if (!best) throw InputError("stratum admits no slice");
  rep.chart = *best;
  rep.index = best_index;
  IndexSet F;
  for (int i : Tc)
    if (!std::binary_search(best->begin(), best->end(), i)) F.push_back(i);
  if (static_cast<int>(F.size()) > max_free)
    throw TooManyVariables("stratum slice has " + std::to_string(F.size()) + " free variables");

  const int nF = static_cast<int>(F.size()), nv = nF + 1;  // last variable inverts the free ones
  std::vector<int> map(m, -1);
  for (int a = 0; a < nF; ++a) map[F[a]] = a;
  auto localize = [&](const Polynomial& p) {
    Polynomial q = p;
    for (int i : *best) q = q.substitute(i, 1);
    for (int i : T.zeros) q = q.substitute(i, 0);
    return q.remap(map, nv);
  };
  std::vector<Polynomial> I;
  for (const auto& e : X.equations) I.push_back(localize(e));
  {
    Exponent e(nv, 1);
    Polynomial rab = Polynomial::monomial(e) - Polynomial::constant(nv, 1);
    I.push_back(rab);
  }
  auto sols = count_solutions(I);
  if (!sols) {
    rep.outcome = StratumOutcome::PositiveDimensional;
    rep.note = "X contains a positive-dimensional part of the stratum";
    return rep;
  }
  rep.slice_solutions = *sols;
  if (*sols == 0) {
    rep.outcome = StratumOutcome::Empty;
    return rep;
  }
  rep.outcome = StratumOutcome::Points;
  if (*sols % static_cast<size_t>(best_index.convert_to<long>()) != 0) rep.note = "slice count not divisible by the index";
  rep.points = *sols / static_cast<size_t>(best_index.convert_to<long>());
  if (!T.orbifold || !T.finite_stabilizer) {
    rep.outcome = StratumOutcome::Unverified;
    rep.note = "X meets a non-Q-factorial stratum";
    return rep;
  }
  auto sf = smith_normal_form<Int>(DTc);
  std::vector<Int> inv;
  for (int i = 0; i < r; ++i)
    if (sf.S(i, i) != 1) inv.push_back(sf.S(i, i));
  if (inv.size() > 1) {
    rep.outcome = StratumOutcome::Unverified;
    rep.note = "non-cyclic stabilizer";
    return rep;
  }
  const Int n = inv.empty() ? Int(1) : inv.back();
  auto character = [&](const IntVector& w) { return n == 1 ? Int(0) : mod((sf.U * w)(r - 1), n); };

  auto nonvanishing = [&](const Polynomial& u) {
    auto J = I;
    J.push_back(u);
    return is_unit_ideal(groebner_basis(J));
  };
  IndexSet V = T.zeros;
  V.insert(V.end(), F.begin(), F.end());
  std::sort(V.begin(), V.end());
  std::vector<LocalChart> local = X.local;
  if (local.empty()) {
    LocalChart lc{Polynomial::constant(m, 1), {}};
    for (size_t e = 0; e < X.equations.size(); ++e) lc.equations.push_back(e);
    local.push_back(lc);
  }
  for (const auto& lc : local) {
    if (!nonvanishing(localize(lc.unit))) continue;
    const int c = static_cast<int>(lc.equations.size());
    if (c > static_cast<int>(V.size())) continue;
    std::vector<std::vector<Polynomial>> jac(c);
    for (int e = 0; e < c; ++e)
      for (int v : V) jac[e].push_back(localize(X.equations[lc.equations[e]].derivative(v)));
    std::vector<IndexSet> choices;
    for_each_subset(static_cast<int>(V.size()), c, [&](const IndexSet& pos) { choices.push_back(pos); });
    auto covers_free = [&](const IndexSet& pos) {
      for (int f : F)
        if (std::none_of(pos.begin(), pos.end(), [&](int p) { return V[p] == f; })) return false;
      return true;
    };
    std::stable_partition(choices.begin(), choices.end(), covers_free);
    for (const auto& pos : choices) {
      std::vector<std::vector<Polynomial>> sub(c);
      for (int e = 0; e < c; ++e)
        for (int p : pos) sub[e].push_back(jac[e][p]);
      if (!nonvanishing(determinant(sub))) continue;
      rep.quasi_smooth = true;
      rep.transversal = covers_free(pos);
      std::vector<Int> w;
      for (size_t p = 0; p < V.size(); ++p)
        if (!std::binary_search(pos.begin(), pos.end(), static_cast<int>(p))) w.push_back(character(G.column(V[p])));
      rep.type = normalize_cyclic(n, w, true);
      return rep;
    }
  }
  rep.outcome = StratumOutcome::Unverified;
  rep.note = "could not certify quasi-smoothness at the solutions";
  return rep;
}

}  // namespace lf
