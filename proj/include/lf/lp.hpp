#pragma once

#include "lf/scalar.hpp"

namespace lf {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize c.x subject to A.row(i) x (rel[i]) b(i); x_j >= 0 unless free_var[j]
struct LinearProgram {
  RatMatrix A;
  RatVector b;
  std::vector<Relation> rel;
  RatVector c;
  std::vector<bool> free_var;

  explicit LinearProgram(Eigen::Index vars);
  void add(const RatVector& row, Relation r, const Rat& rhs);
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVector x;
};

// Two-phase dense simplex over exact rationals with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace lf
