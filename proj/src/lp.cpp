#include "lf/lp.hpp"

namespace lf {

LinearProgram::LinearProgram(Eigen::Index vars)
    : A(0, vars), b(0), c(RatVector::Zero(vars)), free_var(vars, false) {}

void LinearProgram::add(const RatVector& row, Relation r, const Rat& rhs) {
  A.conservativeResize(A.rows() + 1, Eigen::NoChange);
  A.row(A.rows() - 1) = row.transpose();
  b.conservativeResize(b.size() + 1);
  b(b.size() - 1) = rhs;
  rel.push_back(r);
}

namespace {

struct Tableau {
  RatMatrix T;  // constraint rows, last column is the right-hand side
  std::vector<Eigen::Index> basis;

  // Returns false when the objective is unbounded.
  bool optimize(RatVector& obj, Eigen::Index usable_cols) {
    const Eigen::Index m = T.rows(), rhs = T.cols() - 1;
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < usable_cols; ++j)
        if (obj(j) > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (T(i, enter) <= 0) continue;
        Rat ratio = T(i, rhs) / T(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, obj);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c, RatVector& obj) {
    Rat inv = Rat(1) / T(r, c);
    T.row(r) *= inv;
    for (Eigen::Index i = 0; i < T.rows(); ++i)
      if (i != r && T(i, c) != 0) {
        Rat f = T(i, c);
        T.row(i) -= f * T.row(r);
      }
    if (obj(c) != 0) {
      Rat f = obj(c);
      obj -= f * T.row(r).transpose();
    }
    basis[r] = c;
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const Eigen::Index n = lp.A.cols(), m = lp.A.rows();
  // column layout: split variables, slacks, artificials, rhs
  std::vector<Eigen::Index> neg_col(n, -1);
  Eigen::Index cols = n;
  for (Eigen::Index j = 0; j < n; ++j)
    if (lp.free_var[j]) neg_col[j] = cols++;
  const Eigen::Index slack0 = cols;
  Eigen::Index slacks = 0;
  for (auto r : lp.rel)
    if (r != Relation::Equal) ++slacks;
  const Eigen::Index art0 = slack0 + slacks;
  const Eigen::Index total = art0 + m;

  Tableau tab;
  tab.T = RatMatrix::Zero(m, total + 1);
  tab.basis.assign(m, -1);
  Eigen::Index s = slack0;
  for (Eigen::Index i = 0; i < m; ++i) {
    Rat sign = lp.b(i) < 0 ? Rat(-1) : Rat(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      tab.T(i, j) = sign * lp.A(i, j);
      if (neg_col[j] >= 0) tab.T(i, neg_col[j]) = -sign * lp.A(i, j);
    }
    if (lp.rel[i] == Relation::LessEqual) tab.T(i, s++) = sign;
    if (lp.rel[i] == Relation::GreaterEqual) tab.T(i, s++) = -sign;
    tab.T(i, art0 + i) = 1;
    tab.T(i, total) = sign * lp.b(i);
    tab.basis[i] = art0 + i;
  }

  // phase one: drive artificials out
  RatVector obj = RatVector::Zero(total + 1);
  for (Eigen::Index i = 0; i < m; ++i) obj += tab.T.row(i).transpose();
  for (Eigen::Index i = 0; i < m; ++i) obj(art0 + i) = 0;
  tab.optimize(obj, art0);
  LpResult res;
  if (obj(total) != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis[i] < art0) continue;
    for (Eigen::Index j = 0; j < art0; ++j)
      if (tab.T(i, j) != 0) {
        tab.pivot(i, j, obj);
        break;
      }
  }

  // phase two
  RatVector cost = RatVector::Zero(total + 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    cost(j) = lp.c(j);
    if (neg_col[j] >= 0) cost(neg_col[j]) = -lp.c(j);
  }
  // reduced costs relative to the current basis; cost(total) tracks -value
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index bcol = tab.basis[i];
    if (bcol < total && cost(bcol) != 0) {
      Rat f = cost(bcol);
      cost -= f * tab.T.row(i).transpose();
    }
  }
  if (!tab.optimize(cost, art0)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  RatVector full = RatVector::Zero(total);
  for (Eigen::Index i = 0; i < m; ++i)
    if (tab.basis[i] < total) full(tab.basis[i]) = tab.T(i, total);
  res.status = LpStatus::Optimal;
  res.x = RatVector::Zero(n);
  res.value = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    res.x(j) = full(j) - (neg_col[j] >= 0 ? full(neg_col[j]) : Rat(0));
    res.value += lp.c(j) * res.x(j);
  }
  return res;
}

}  // namespace lf
