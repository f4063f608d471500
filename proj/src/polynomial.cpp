#include "lf/polynomial.hpp"

#include "lf/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lf {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rat& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

Rat Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InputError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (long x : e) s += x;
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  p *= Rat(-1);
  return p;
}

Polynomial Polynomial::substitute(int var, const Rat& value) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    Rat v = c;
    for (long k = 0; k < e[var]; ++k) v *= value;
    p.add_term(f, v);
  }
  return p;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    p.add_term(f, c * e[var]);
  }
  return p;
}

Polynomial Polynomial::remap(const std::vector<int>& map, int n) const {
  Polynomial p(n);
  for (const auto& [e, c] : terms_) {
    Exponent f(n, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw InputError("remap drops a variable that occurs");
      f[map[i]] += e[i];
    }
    p.add_term(f, c);
  }
  return p;
}

bool Polynomial::involves(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(a.nvars());
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) {
      Exponent e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      p.add_term(e, c1 * c2);
    }
  return p;
}

Polynomial pow(const Polynomial& f, unsigned k) {
  Polynomial out = Polynomial::constant(f.nvars(), 1), base = f;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat m = abs(c);
    bool coef = m != 1 || unit;
    if (coef) os << to_string(m);
    bool sep = coef;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (sep) os << "*";
      sep = true;
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

Polynomial shifted(const Polynomial& g, const Exponent& by, const Rat& c) {
  Polynomial p(g.nvars());
  for (const auto& [e, v] : g.terms()) {
    Exponent f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += by[i];
    p.add_term(f, v * c);
  }
  return p;
}

Polynomial monic(Polynomial p) {
  if (!p.is_zero()) p *= Rat(1) / p.leading_coefficient();
  return p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  Exponent a(l.size()), b(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    a[i] = l[i] - f.leading_exponent()[i];
    b[i] = l[i] - g.leading_exponent()[i];
  }
  return shifted(f, a, Rat(1) / f.leading_coefficient()) - shifted(g, b, Rat(1) / g.leading_coefficient());
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial p = f, r(f.nvars());
  while (!p.is_zero()) {
    const Exponent lt = p.leading_exponent();
    const Rat lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (!divides(g.leading_exponent(), lt)) continue;
      Exponent by(lt.size());
      for (size_t i = 0; i < lt.size(); ++i) by[i] = lt[i] - g.leading_exponent()[i];
      p -= shifted(g, by, lc / g.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt, lc);
      p.add_term(lt, -lc);
    }
  }
  return r;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens) {
  std::vector<Polynomial> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(monic(std::move(g)));
  if (G.empty()) return G;
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(G[i].leading_exponent(), G[j].leading_exponent())) continue;
    Polynomial h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    G.push_back(monic(std::move(h)));
    if (G.back().is_constant()) return {G.back()};
    for (size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // minimal, then reduced
  std::vector<Polynomial> M;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].leading_exponent(), G[i].leading_exponent())) continue;
      redundant = G[j].leading_exponent() != G[i].leading_exponent() || j < i;
    }
    if (!redundant) M.push_back(G[i]);
  }
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<Polynomial> rest;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) rest.push_back(M[j]);
    M[i] = monic(normal_form(M[i], rest));
  }
  std::sort(M.begin(), M.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_exponent() < b.leading_exponent();
  });
  return M;
}

bool is_unit_ideal(const std::vector<Polynomial>& basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

namespace {

using Univariate = std::vector<Rat>;  // coefficient of t^k at index k

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate poly_mod(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

Univariate poly_div(Univariate a, const Univariate& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Univariate q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

Univariate poly_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// squarefree part of the univariate element of a zero-dimensional ideal in x_var
std::optional<Polynomial> squarefree_eliminant(const std::vector<Polynomial>& gens, int var) {
  const int n = gens.front().nvars();
  // move var to the last (smallest) position
  std::vector<int> fwd(n), back(n);
  for (int i = 0, k = 0; i < n; ++i)
    if (i != var) fwd[i] = k++;
  fwd[var] = n - 1;
  for (int i = 0; i < n; ++i) back[fwd[i]] = i;
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(g.remap(fwd, n));
  auto G = groebner_basis(moved);
  for (const auto& g : G) {
    bool uni = true;
    for (int i = 0; i + 1 < n && uni; ++i) uni = !g.involves(i);
    if (!uni) continue;
    Univariate u;
    for (const auto& [e, c] : g.terms()) {
      size_t k = static_cast<size_t>(e[n - 1]);
      if (u.size() <= k) u.resize(k + 1, Rat(0));
      u[k] = c;
    }
    Univariate d(u.size() > 1 ? u.size() - 1 : 0);
    for (size_t k = 1; k < u.size(); ++k) d[k - 1] = u[k] * static_cast<long>(k);
    Univariate sf = poly_div(u, poly_gcd(u, d));
    Polynomial p(n);
    for (size_t k = 0; k < sf.size(); ++k) {
      Exponent e(n, 0);
      e[var] = static_cast<long>(k);
      p.add_term(e, sf[k]);
    }
    (void)back;
    return p;
  }
  return std::nullopt;
}

}  // namespace

std::optional<size_t> count_solutions(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) {
    if (gens.empty() || gens.front().nvars() == 0) return 1;
    return std::nullopt;
  }
  const int n = nz.front().nvars();
  auto G = groebner_basis(nz);
  if (is_unit_ideal(G)) return 0;
  if (n == 0) return 1;
  auto pure_bounds = [&](const std::vector<Polynomial>& B) -> std::optional<std::vector<long>> {
    std::vector<long> bound(n, -1);
    for (const auto& g : B) {
      const auto& e = g.leading_exponent();
      int nzc = 0, at = -1;
      for (int i = 0; i < n; ++i)
        if (e[i]) ++nzc, at = i;
      if (nzc == 1 && (bound[at] < 0 || e[at] < bound[at])) bound[at] = e[at];
    }
    for (long b : bound)
      if (b < 0) return std::nullopt;
    return bound;
  };
  if (!pure_bounds(G)) return std::nullopt;
  std::vector<Polynomial> rad = G;
  for (int v = 0; v < n; ++v)
    if (auto p = squarefree_eliminant(G, v)) rad.push_back(*p);
  G = groebner_basis(rad);
  auto bound = *pure_bounds(G);
  size_t count = 0;
  Exponent e(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& g : G)
      if (divides(g.leading_exponent(), e)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int k = 0;
    while (k < n && e[k] + 1 >= bound[k]) e[k++] = 0;
    if (k == n) break;
    ++e[k];
  }
  return count;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) return Polynomial::constant(0, 1);
  const int nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  Polynomial det(nv);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace lf
