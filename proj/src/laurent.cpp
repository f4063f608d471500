#include "lf/laurent.hpp"

#include "lf/errors.hpp"
#include "lf/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lf {

LaurentPolynomial::LaurentPolynomial(int rank, const std::vector<std::pair<Exponent, long>>& terms)
    : rank_(rank) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Int& c) {
  LaurentPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(int rank, const Int& c) {
  return monomial(Exponent(rank, 0), c);
}

Int LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank_) throw InputError("exponent of wrong rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<IntVector> LaurentPolynomial::support() const {
  std::vector<IntVector> out;
  for (const auto& [e, c] : terms_) out.push_back(to_int_vector(e));
  return out;
}

bool LaurentPolynomial::non_negative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

namespace {

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

struct ExponentHash {
  size_t operator()(const Exponent& e) const {
    size_t h = 1469598103934665603ull;
    for (long x : e) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

long pairing(const IntVector& w, const Exponent& v) {
  long s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += w(i).convert_to<long>() * v[i];
  return s;
}

}  // namespace

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out(a.rank());
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) out.add_term(add(e1, e2), c1 * c2);
  return out;
}

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k) {
  LaurentPolynomial out = LaurentPolynomial::constant(f.rank(), 1), base = f;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

std::optional<LaurentPolynomial> divide(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw InputError("division by zero polynomial");
  const int n = num.rank();
  LaurentPolynomial q(n);
  if (num.is_zero()) return q;
  // the quotient's Newton polytope is a Minkowski summand, which bounds its box
  Exponent lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    long nmin = LONG_MAX, nmax = LONG_MIN, dmin = LONG_MAX, dmax = LONG_MIN;
    for (const auto& [e, c] : num.terms()) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    for (const auto& [e, c] : den.terms()) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [dlead, dcoef] = *den.terms().rbegin();
  LaurentPolynomial r = num;
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms().rbegin();
    if (rcoef % dcoef != 0) return std::nullopt;
    Exponent e = sub(rlead, dlead);
    for (int i = 0; i < n; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    Int c = rcoef / dcoef;
    auto t = LaurentPolynomial::monomial(e, c);
    q += t;
    r -= t * den;
  }
  return q;
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int m = abs(c);
    if (m != 1 || unit) os << m.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (m != 1 || unit || i > 0 ? "" : "") << "x" << i + 1;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw InputError("Newton polytope of the zero polynomial");
  return convex_hull(f.support());
}

std::vector<Int> classical_period(const LaurentPolynomial& f, int K, size_t max_terms) {
  if (K < 0) throw InputError("negative number of period terms");
  if (max_terms == 0) {
    max_terms = 20000000;
    if (const char* env = std::getenv("LF_MAX_TERMS")) {
      long v = std::atol(env);
      if (v > 0) max_terms = static_cast<size_t>(v);
    }
  }
  const int n = f.rank();
  const Exponent zero(n, 0);
  std::vector<Int> out{1};
  if (K == 0) return out;
  if (f.is_zero()) {
    out.resize(K + 1, Int(0));
    return out;
  }
  auto P = newton_polytope(f);
  std::vector<std::pair<std::vector<long>, long>> ineq;
  if (P.full_dimensional())
    for (const auto& fc : P.facets) ineq.emplace_back(to_exponent(fc.normal), fc.offset.convert_to<long>());

  std::vector<std::pair<Exponent, Int>> fterms(f.terms().begin(), f.terms().end());
  std::unordered_map<Exponent, Int, ExponentHash> cur{{zero, Int(1)}}, next;
  for (int k = 1; k <= K; ++k) {
    next.clear();
    const long remaining = K - k;
    for (const auto& [e, c] : cur)
      for (const auto& [fe, fc] : fterms) {
        Exponent s = add(e, fe);
        // keep s only if 0 is reachable: -s must lie in remaining * P
        bool keep = true;
        for (const auto& [nrm, off] : ineq) {
          long v = 0;
          for (int i = 0; i < n; ++i) v -= nrm[i] * s[i];
          if (v < remaining * off) {
            keep = false;
            break;
          }
        }
        if (!keep) continue;
        auto [it, inserted] = next.emplace(std::move(s), c * fc);
        if (!inserted) it->second += c * fc;
      }
    if (next.size() > max_terms) throw ResourceLimit("period expansion exceeded " + std::to_string(max_terms) + " terms");
    std::swap(cur, next);
    auto it = cur.find(zero);
    out.push_back(it == cur.end() ? Int(0) : it->second);
  }
  return out;
}

LaurentPolynomial change_basis(const LaurentPolynomial& f, const IntMatrix& U) {
  if (U.rows() != f.rank() || U.cols() != f.rank() || !is_unimodular(U))
    throw InputError("change of basis needs a unimodular matrix of matching rank");
  LaurentPolynomial g(f.rank());
  for (const auto& [e, c] : f.terms()) g.add_term(to_exponent(U * to_int_vector(e)), c);
  return g;
}

bool is_valid(const MutationDatum& d) {
  if (d.w.size() != d.a.rank() || content(d.w) != 1 || d.a.is_zero()) return false;
  for (const auto& [e, c] : d.a.terms())
    if (pairing(d.w, e) != 0) return false;
  return true;
}

namespace {

std::map<long, LaurentPolynomial> graded_pieces(const LaurentPolynomial& f, const IntVector& w) {
  std::map<long, LaurentPolynomial> pieces;
  for (const auto& [e, c] : f.terms()) {
    long h = pairing(w, e);
    auto it = pieces.try_emplace(h, f.rank()).first;
    it->second.add_term(e, c);
  }
  return pieces;
}

std::optional<LaurentPolynomial> try_mutate(const LaurentPolynomial& f, const MutationDatum& d) {
  if (!is_valid(d)) throw InputError("invalid mutation datum");
  LaurentPolynomial g(f.rank());
  std::map<long, LaurentPolynomial> powers;
  auto apow = [&](long k) -> const LaurentPolynomial& {
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, pow(d.a, static_cast<unsigned>(k))).first;
    return it->second;
  };
  for (const auto& [h, piece] : graded_pieces(f, d.w)) {
    if (h >= 0) {
      g += piece * apow(h);
    } else {
      auto q = divide(piece, apow(-h));
      if (!q) return std::nullopt;
      g += *q;
    }
  }
  return g;
}

}  // namespace

bool is_mutable(const LaurentPolynomial& f, const MutationDatum& d) { return try_mutate(f, d).has_value(); }

LaurentPolynomial mutate(const LaurentPolynomial& f, const MutationDatum& d) {
  auto g = try_mutate(f, d);
  if (!g) throw NotMutable("polynomial is not mutable with respect to the given datum");
  return *g;
}

namespace {

std::vector<IntVector> primitive_covectors(int n, int bound) {
  std::vector<IntVector> out;
  IntVector w = IntVector::Constant(n, Int(-bound));
  for (;;) {
    if (content(w) == 1) out.push_back(w);
    int k = 0;
    while (k < n && w(k) == bound) {
      w(k) = -bound;
      ++k;
    }
    if (k == n) break;
    w(k) += 1;
  }
  return out;
}

// Orientation-normalised primitive edge directions of the piece inside w-perp,
// given in lattice coordinates of w-perp.
std::vector<IntVector> edge_directions(const std::vector<IntVector>& pts) {
  std::vector<IntVector> dirs;
  auto orient = [](IntVector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) {
        if (v(i) < 0) v = -v;
        break;
      }
    return v;
  };
  auto P = convex_hull(pts);
  if (P.dim <= 0) return dirs;
  const int m = P.ambient_rank;
  if (P.dim == 1) {
    dirs.push_back(orient(primitive(P.vertices[1] - P.vertices[0])));
  } else if (m == 2) {
    for (const auto& f : P.facets) dirs.push_back(orient(int_vector({-f.normal(1).convert_to<long>(), f.normal(0).convert_to<long>()})));
  } else {
    for (size_t i = 0; i < P.vertices.size(); ++i)
      for (size_t j = i + 1; j < P.vertices.size(); ++j) dirs.push_back(orient(primitive(P.vertices[j] - P.vertices[i])));
  }
  std::sort(dirs.begin(), dirs.end(), IntVectorLess());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

}  // namespace

std::vector<MutationDatum> mutation_candidates(const LaurentPolynomial& f, int w_bound) {
  const int n = f.rank();
  std::vector<MutationDatum> out;
  if (n < 2 || f.is_zero()) return out;
  const Exponent zero(n, 0);
  for (const auto& w : primitive_covectors(n, w_bound)) {
    auto pieces = graded_pieces(f, w);
    long hmin = pieces.begin()->first;
    if (hmin >= 0) continue;
    const LaurentPolynomial& low = pieces.begin()->second;
    const unsigned k = static_cast<unsigned>(-hmin);
    IntMatrix wrow(1, n);
    wrow.row(0) = w.transpose();
    IntMatrix B = kernel_basis<Int>(wrow);  // rows: basis of w-perp
    RatMatrix Bt = to_rat(B).transpose();
    const IntVector base = to_int_vector(low.terms().begin()->first);
    std::vector<IntVector> local;
    for (const auto& [e, c] : low.terms()) {
      auto y = solve(Bt, to_rat((to_int_vector(e) - base).eval()));
      IntVector yi(y->size());
      for (Eigen::Index i = 0; i < y->size(); ++i) yi(i) = numerator((*y)(i));
      local.push_back(yi);
    }
    auto lift = [&](const IntVector& y) { return to_exponent((B.transpose() * y).eval()); };
    auto divides = [&](const LaurentPolynomial& a) { return divide(low, pow(a, k)).has_value(); };

    // irreducible-looking building blocks and their maximal multiplicities
    std::vector<std::pair<LaurentPolynomial, int>> blocks;
    auto dirs = edge_directions(local);
    for (const auto& e : dirs) {
      auto a = LaurentPolynomial::constant(n, 1) + LaurentPolynomial::monomial(lift(e));
      int j = 0;
      while (divides(pow(a, j + 1))) ++j;
      if (j > 0) blocks.emplace_back(a, j);
    }
    for (size_t i = 0; i < dirs.size(); ++i)
      for (size_t j = i + 1; j < dirs.size(); ++j)
        for (int s = 0; s < 4; ++s) {
          IntVector e1 = (s & 1) ? IntVector(-dirs[i]) : dirs[i];
          IntVector e2 = (s & 2) ? IntVector(-dirs[j]) : dirs[j];
          auto a = LaurentPolynomial::constant(n, 1) + LaurentPolynomial::monomial(lift(e1)) +
                   LaurentPolynomial::monomial(lift(e2));
          if (divides(a)) blocks.emplace_back(a, 1);
        }

    std::set<LaurentPolynomial> seen;
    std::vector<int> mult(blocks.size(), 0);
    for (;;) {
      size_t b = 0;
      while (b < blocks.size() && mult[b] == blocks[b].second) mult[b++] = 0;
      if (b == blocks.size()) break;
      ++mult[b];
      auto a = LaurentPolynomial::constant(n, 1);
      for (size_t i = 0; i < blocks.size(); ++i)
        if (mult[i]) a = a * pow(blocks[i].first, mult[i]);
      if (!seen.insert(a).second || !divides(a)) continue;
      MutationDatum d{w, a};
      if (is_mutable(f, d)) out.push_back(std::move(d));
      if (seen.size() > 256) break;
    }
  }
  return out;
}

std::optional<size_t> MutationGraph::find(const IntMatrix& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (compare(vertices[i].label, label) == 0) return i;
  return std::nullopt;
}

std::string MutationGraph::to_dot() const {
  std::ostringstream os;
  os << "graph mutations {\n";
  for (size_t i = 0; i < vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << i << " (depth " << vertices[i].depth << ", "
       << vertices[i].label.cols() << " vertices)\"];\n";
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

int compare_datum(const MutationDatum& a, const MutationDatum& b) {
  int c = compare(a.w, b.w);
  if (c) return c;
  if (a.a < b.a) return -1;
  if (b.a < a.a) return 1;
  return 0;
}

struct LabelCache {
  std::map<std::vector<IntVector>, IntMatrix, bool (*)(const std::vector<IntVector>&, const std::vector<IntVector>&)>
      memo{[](const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), IntVectorLess());
      }};
  IntMatrix operator()(const LaurentPolynomial& g) {
    auto P = newton_polytope(g);
    auto it = memo.find(P.vertices);
    if (it != memo.end()) return it->second;
    IntMatrix nf = affine_normal_form(P);
    memo.emplace(P.vertices, nf);
    return nf;
  }
};

}  // namespace

MutationGraph mutation_graph(const LaurentPolynomial& f, int depth, int w_bound) {
  MutationGraph G;
  LabelCache label;
  G.vertices.push_back({label(f), f, 0});
  std::set<std::pair<size_t, size_t>> edges;
  for (size_t v = 0; v < G.vertices.size(); ++v) {
    if (G.vertices[v].depth >= depth) continue;
    struct Child {
      IntMatrix label;
      MutationDatum datum;
      LaurentPolynomial poly;
    };
    std::vector<Child> children;
    for (auto& d : mutation_candidates(G.vertices[v].representative, w_bound)) {
      auto g = mutate(G.vertices[v].representative, d);
      children.push_back({label(g), std::move(d), std::move(g)});
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
      int c = compare(a.label, b.label);
      return c ? c < 0 : compare_datum(a.datum, b.datum) < 0;
    });
    for (auto& ch : children) {
      auto idx = G.find(ch.label);
      if (!idx) {
        G.vertices.push_back({ch.label, std::move(ch.poly), G.vertices[v].depth + 1});
        idx = G.vertices.size() - 1;
      }
      if (*idx != v) edges.emplace(std::min(v, *idx), std::max(v, *idx));
    }
  }
  G.edges.assign(edges.begin(), edges.end());
  return G;
}

GraphOrder compare_graphs(const LaurentPolynomial& f, const LaurentPolynomial& g, int depth, int w_bound) {
  auto Gf = mutation_graph(f, depth, w_bound), Gg = mutation_graph(g, depth, w_bound);
  auto key = [](const MutationGraph& G) {
    std::set<std::vector<IntMatrix>, bool (*)(const std::vector<IntMatrix>&, const std::vector<IntMatrix>&)> s(
        [](const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                              [](const IntMatrix& x, const IntMatrix& y) { return compare(x, y) < 0; });
        });
    for (const auto& v : G.vertices) s.insert({v.label});
    for (auto [a, b] : G.edges) {
      IntMatrix x = G.vertices[a].label, y = G.vertices[b].label;
      if (compare(y, x) < 0) std::swap(x, y);
      s.insert({x, y});
    }
    return s;
  };
  auto kf = key(Gf), kg = key(Gg);
  bool f_in_g = std::includes(kg.begin(), kg.end(), kf.begin(), kf.end(), kg.key_comp());
  bool g_in_f = std::includes(kf.begin(), kf.end(), kg.begin(), kg.end(), kf.key_comp());
  if (f_in_g && g_in_f) return GraphOrder::Equal;
  if (f_in_g) return GraphOrder::Less;
  if (g_in_f) return GraphOrder::Greater;
  return GraphOrder::Incomparable;
}

}  // namespace lf
