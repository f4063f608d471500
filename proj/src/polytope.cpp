#include "lf/polytope.hpp"

#include "lf/errors.hpp"
#include "lf/lattice.hpp"
#include "lf/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lf {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

// Bareiss fraction-free determinant.
Int bareiss(IntMatrix M) {
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.row(p).swap(M.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

// Normal to the hyperplane spanned by the d-1 rows of D (generalised cross product).
IntVector hyperplane_normal(const IntMatrix& D) {
  const Eigen::Index d = D.cols();
  IntVector nrm(d);
  IntMatrix minor(d - 1, d - 1);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0, c = 0; j < d; ++j) {
      if (j == k) continue;
      minor.col(c++) = D.col(j);
    }
    Int det = bareiss(minor);
    nrm(k) = (k % 2 == 0) ? det : Int(-det);
  }
  return primitive(nrm);
}

struct FacetKey {
  bool operator()(const Facet& a, const Facet& b) const {
    int c = compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  }
};

// Full-dimensional hull in Z^d of distinct points.
void full_hull(const std::vector<IntVector>& pts, int d, std::vector<Facet>& facets,
               std::vector<char>& is_vertex, bool prefilter = true) {
  const size_t n = pts.size();
  is_vertex.assign(n, 0);
  std::set<Facet, FacetKey> found;
  if (d == 0) {
    is_vertex[0] = 1;
    return;
  }
  if (d == 1) {
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < n; ++i) {
      if (pts[i](0) < pts[lo](0)) lo = i;
      if (pts[i](0) > pts[hi](0)) hi = i;
    }
    is_vertex[lo] = is_vertex[hi] = 1;
    facets.push_back({int_vector({1}), pts[lo](0)});
    facets.push_back({int_vector({-1}), Int(-pts[hi](0))});
    return;
  }
  if (prefilter && n > static_cast<size_t>(4 * d + 8)) {
    // discard points strictly inside the hull of a few extreme points
    std::vector<IntVector> dirs;
    IntVector w = IntVector::Constant(d, Int(-1));
    for (;;) {
      if (!is_zero(w)) dirs.push_back(w);
      int k = 0;
      while (k < d && w(k) == 1) w(k++) = -1;
      if (k == d || d > 4) break;
      w(k) += 1;
    }
    for (int i = 0; i < d && d > 4; ++i) {
      dirs.push_back(IntVector::Unit(d, i));
      dirs.push_back(-IntVector::Unit(d, i));
    }
    std::set<size_t> seeds;
    for (const auto& u : dirs) {
      size_t best = 0;
      Int bv = dot(u, pts[0]);
      for (size_t p = 1; p < n; ++p) {
        Int v = dot(u, pts[p]);
        if (v > bv) bv = v, best = p;
      }
      seeds.insert(best);
    }
    std::vector<IntVector> sp;
    for (size_t i : seeds) sp.push_back(pts[i]);
    IntMatrix diffs(sp.size() - 1, d);
    for (size_t i = 1; i < sp.size(); ++i) diffs.row(i - 1) = (sp[i] - sp[0]).transpose();
    if (sp.size() < n && rank(diffs) == d) {
      std::vector<Facet> sf;
      std::vector<char> sv;
      full_hull(sp, d, sf, sv, false);
      std::vector<size_t> keep;
      for (size_t p = 0; p < n; ++p) {
        bool inside = true;
        for (const auto& f : sf)
          if (dot(f.normal, pts[p]) <= f.offset) {
            inside = false;
            break;
          }
        if (!inside) keep.push_back(p);
      }
      std::vector<IntVector> kp;
      for (size_t p : keep) kp.push_back(pts[p]);
      std::vector<char> kv;
      full_hull(kp, d, facets, kv, false);
      for (size_t i = 0; i < keep.size(); ++i) is_vertex[keep[i]] = kv[i];
      return;
    }
  }
  std::vector<size_t> idx(d);
  IntMatrix D(d - 1, d);
  // enumerate d-subsets in lexicographic order
  for (size_t i = 0; i < static_cast<size_t>(d); ++i) idx[i] = i;
  for (;;) {
    for (int r = 1; r < d; ++r) D.row(r - 1) = (pts[idx[r]] - pts[idx[0]]).transpose();
    IntVector nrm = hyperplane_normal(D);
    if (!is_zero(nrm)) {
      Int off = dot(nrm, pts[idx[0]]);
      bool pos = true, neg = true;
      for (size_t p = 0; p < n && (pos || neg); ++p) {
        Int v = dot(nrm, pts[p]) - off;
        if (v < 0) pos = false;
        if (v > 0) neg = false;
      }
      if (pos) found.insert({nrm, off});
      if (neg) found.insert({IntVector(-nrm), Int(-off)});
    }
    int k = d - 1;
    while (k >= 0 && idx[k] == n - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  facets.assign(found.begin(), found.end());
  for (size_t p = 0; p < n; ++p) {
    IntMatrix tight(0, d);
    for (const auto& f : facets)
      if (dot(f.normal, pts[p]) == f.offset) {
        tight.conservativeResize(tight.rows() + 1, Eigen::NoChange);
        tight.row(tight.rows() - 1) = f.normal.transpose();
      }
    if (tight.rows() >= d && rank(tight) == d) is_vertex[p] = 1;
  }
}

}  // namespace

bool LatticePolytope::contains(const IntVector& p) const {
  if (dim < 0) return false;
  for (const auto& e : equations)
    if (dot(e.normal, p) != e.offset) return false;
  for (const auto& f : facets)
    if (dot(f.normal, p) < f.offset) return false;
  return true;
}

bool LatticePolytope::strictly_inside(const IntVector& p) const {
  if (!contains(p)) return false;
  for (const auto& f : facets)
    if (dot(f.normal, p) == f.offset) return false;
  return dim > 0 || vertices.size() == 1;
}

LatticePolytope convex_hull(const std::vector<IntVector>& input) {
  if (input.empty()) throw InputError("convex hull of no points");
  const int n = static_cast<int>(input[0].size());
  if (n > 7) throw InputError("convex hull limited to rank 7");
  std::vector<IntVector> pts = input;
  for (const auto& p : pts)
    if (p.size() != n) throw InputError("points of mixed rank");
  std::sort(pts.begin(), pts.end(), IntVectorLess());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope P;
  P.ambient_rank = n;
  // affine hull via a unimodular change of coordinates
  IntMatrix diffs(n, static_cast<Eigen::Index>(pts.size()) - 1);
  for (size_t i = 1; i < pts.size(); ++i) diffs.col(i - 1) = pts[i] - pts[0];
  auto hf = hermite_normal_form<Int>(diffs);
  const int d = static_cast<int>(hf.pivots.size());
  P.dim = d;
  const IntMatrix& U = hf.U;
  for (int i = d; i < n; ++i) {
    IntVector row = U.row(i).transpose();
    P.equations.push_back({row, dot(row, pts[0])});
  }
  std::vector<IntVector> local;
  for (const auto& p : pts) local.push_back((U * (p - pts[0])).head(d));
  std::vector<Facet> lf;
  std::vector<char> is_vertex;
  full_hull(local, d, lf, is_vertex);
  for (size_t i = 0; i < pts.size(); ++i)
    if (is_vertex[i]) P.vertices.push_back(pts[i]);
  for (const auto& f : lf) {
    IntVector ext = IntVector::Zero(n);
    ext.head(d) = f.normal;
    IntVector nrm = U.transpose() * ext;
    P.facets.push_back({nrm, f.offset + dot(nrm, pts[0])});
  }
  std::sort(P.facets.begin(), P.facets.end(), FacetKey());
  return P;
}

std::vector<IntVector> lattice_points(const LatticePolytope& P) {
  std::vector<IntVector> out;
  if (P.dim < 0) return out;
  const int n = P.ambient_rank;
  IntVector lo = P.vertices[0], hi = P.vertices[0];
  for (const auto& v : P.vertices)
    for (int i = 0; i < n; ++i) {
      if (v(i) < lo(i)) lo(i) = v(i);
      if (v(i) > hi(i)) hi(i) = v(i);
    }
  if (n == 0) return {IntVector(0)};
  IntVector x = lo;
  for (;;) {
    if (P.contains(x)) out.push_back(x);
    int k = 0;
    while (k < n && x(k) == hi(k)) {
      x(k) = lo(k);
      ++k;
    }
    if (k == n) break;
    x(k) += 1;
  }
  std::sort(out.begin(), out.end(), IntVectorLess());
  return out;
}

LatticePolytope transform(const LatticePolytope& P, const IntMatrix& U) {
  std::vector<IntVector> img;
  for (const auto& v : P.vertices) img.push_back(U * v);
  return convex_hull(img);
}

bool same_polytope(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.ambient_rank != Q.ambient_rank || P.vertices.size() != Q.vertices.size()) return false;
  for (size_t i = 0; i < P.vertices.size(); ++i)
    if (P.vertices[i] != Q.vertices[i]) return false;
  return true;
}

FanoClass classify_fano_polytope(const LatticePolytope& P) {
  if (!P.full_dimensional()) throw InputError("classification needs a full-dimensional polytope");
  FanoClass fc;
  IntVector origin = IntVector::Zero(P.ambient_rank);
  if (!P.strictly_inside(origin)) return fc;
  for (const auto& v : P.vertices)
    if (content(v) != 1) return fc;
  fc.fano = true;
  auto pts = lattice_points(P);
  fc.canonical = true;
  fc.terminal = true;
  for (const auto& p : pts) {
    if (p == origin) continue;
    if (P.strictly_inside(p)) fc.canonical = false;
    if (!std::binary_search(P.vertices.begin(), P.vertices.end(), p, IntVectorLess())) fc.terminal = false;
  }
  if (!fc.canonical) fc.terminal = false;
  return fc;
}

namespace {

// Partial Hermite-form state for a prefix of vertices.
struct NfState {
  IntMatrix U;
  Eigen::Index rank = 0;
  std::vector<char> used;
};

IntVector next_column(const NfState& s, const IntVector& v) {
  IntVector c = s.U * v;
  const Eigen::Index n = c.size();
  Int g = 0;
  for (Eigen::Index i = s.rank; i < n; ++i) g = gcd(g, c(i));
  if (g == 0) return c;
  IntVector out = IntVector::Zero(n);
  for (Eigen::Index i = 0; i < s.rank; ++i) out(i) = c(i) - detail::floor_div(c(i), g) * g;
  out(s.rank) = g;
  return out;
}

void advance(NfState& s, const IntVector& v) {
  const Eigen::Index n = s.U.rows();
  IntVector c = s.U * v;
  bool tail = false;
  for (Eigen::Index i = s.rank; i < n; ++i)
    if (c(i) != 0) tail = true;
  if (!tail) return;
  // gcd-eliminate c[rank:] using row operations among the trailing rows
  for (;;) {
    Eigen::Index best = -1;
    for (Eigen::Index i = s.rank; i < n; ++i)
      if (c(i) != 0 && (best < 0 || abs(c(i)) < abs(c(best)))) best = i;
    if (best != s.rank) {
      s.U.row(best).swap(s.U.row(s.rank));
      std::swap(c(best), c(s.rank));
    }
    bool clean = true;
    for (Eigen::Index i = s.rank + 1; i < n; ++i) {
      if (c(i) == 0) continue;
      Int q = c(i) / c(s.rank);
      s.U.row(i) -= q * s.U.row(s.rank);
      c(i) -= q * c(s.rank);
      if (c(i) != 0) clean = false;
    }
    if (clean) break;
  }
  if (c(s.rank) < 0) {
    s.U.row(s.rank) *= Int(-1);
    c(s.rank) = -c(s.rank);
  }
  for (Eigen::Index i = 0; i < s.rank; ++i) {
    Int q = detail::floor_div(c(i), c(s.rank));
    if (q != 0) s.U.row(i) -= q * s.U.row(s.rank);
  }
  ++s.rank;
}

}  // namespace

IntMatrix affine_normal_form(const LatticePolytope& P) {
  const Eigen::Index n = P.ambient_rank;
  const size_t k = P.vertices.size();
  IntMatrix out(n, static_cast<Eigen::Index>(k));
  std::vector<NfState> states{{IntMatrix::Identity(n, n), 0, std::vector<char>(k, 0)}};
  for (size_t level = 0; level < k; ++level) {
    IntVector best;
    std::vector<std::pair<size_t, size_t>> winners;
    for (size_t s = 0; s < states.size(); ++s)
      for (size_t v = 0; v < k; ++v) {
        if (states[s].used[v]) continue;
        IntVector col = next_column(states[s], P.vertices[v]);
        int c = winners.empty() ? -1 : compare(col, best);
        if (c < 0) {
          best = col;
          winners.clear();
        }
        if (c <= 0) winners.emplace_back(s, v);
      }
    out.col(level) = best;
    std::vector<NfState> next;
    next.reserve(winners.size());
    for (auto [s, v] : winners) {
      NfState st = states[s];
      advance(st, P.vertices[v]);
      st.used[v] = 1;
      next.push_back(std::move(st));
    }
    states = std::move(next);
  }
  return out;
}

namespace {

LinearProgram cone_program(const RationalCone& C, const RatVector& p) {
  const Eigen::Index g = static_cast<Eigen::Index>(C.generators.size());
  // variables: lambda_1..lambda_g, delta
  LinearProgram lp(g + 1);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    RatVector row = RatVector::Zero(g + 1);
    for (Eigen::Index j = 0; j < g; ++j) row(j) = C.generators[j](i);
    lp.add(row, Relation::Equal, p(i));
  }
  for (Eigen::Index j = 0; j < g; ++j) {
    RatVector row = RatVector::Zero(g + 1);
    row(j) = 1;
    row(g) = -1;
    lp.add(row, Relation::GreaterEqual, 0);
  }
  RatVector cap = RatVector::Zero(g + 1);
  cap(g) = 1;
  lp.add(cap, Relation::LessEqual, 1);
  lp.c(g) = 1;
  return lp;
}

}  // namespace

bool cone_contains(const RationalCone& C, const RatVector& p) {
  if (C.generators.empty()) return is_zero(p);
  return solve_lp(cone_program(C, p)).status == LpStatus::Optimal;
}

bool relint_contains(const RationalCone& C, const RatVector& p) {
  if (C.generators.empty()) return is_zero(p);
  auto res = solve_lp(cone_program(C, p));
  return res.status == LpStatus::Optimal && res.value > 0;
}

}  // namespace lf
