#include "lf/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace lf {

Int floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Int ceil(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int c = n / d;
  if (n % d != 0 && n > 0) c += 1;
  return c;
}

Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  auto check_int = [&](const std::string& t) {
    if (t.empty()) bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  check_int(num);
  if (num[0] == '+') num = num.substr(1);
  Rat out{Int(num)};
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    check_int(den);
    if (den[0] == '+') den = den.substr(1);
    Int d(den);
    if (d == 0) bad();
    out /= Rat(d);
  }
  return out;
}

std::string to_string(const Int& a) { return a.str(); }

std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

IntVector to_int_vector(const Exponent& e) {
  IntVector v(static_cast<Eigen::Index>(e.size()));
  for (size_t i = 0; i < e.size(); ++i) v(i) = e[i];
  return v;
}

Exponent to_exponent(const IntVector& v) {
  Exponent e(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) e[i] = v(i).convert_to<long>();
  return e;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const Eigen::Index r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector int_vector(const std::vector<long>& entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(i) = entries[i];
  return v;
}

RatVector rat_vector(const std::vector<Rat>& entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(i) = entries[i];
  return v;
}

int compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j) ? -1 : 1;
  return 0;
}

int compare(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i) ? -1 : 1;
  return 0;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

}  // namespace lf
