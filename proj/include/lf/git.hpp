#pragma once

#include "lf/polynomial.hpp"
#include "lf/scalar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lf {

// A toric variety as the quotient of C^m by a torus with character matrix
// `weights` (rows span the weight lattice, columns are the D_i) at stability omega.
struct GitPresentation {
  IntMatrix weights;
  RatVector omega;
  std::vector<std::string> names;

  int rank() const { return static_cast<int>(weights.rows()); }
  int size() const { return static_cast<int>(weights.cols()); }
  std::string name(int i) const;
  IntVector column(int i) const { return weights.col(i); }
  IntVector anticanonical() const;  // sum of all columns
};

GitPresentation make_presentation(IntMatrix weights, RatVector omega, std::vector<std::string> names = {});

// Columns picked and reordered by name.
GitPresentation select_columns(const GitPresentation& G, const std::vector<std::string>& names);

// Equal up to a change of basis of the weight lattice: [W | L | omega] span
// the same row lattice. Column order and names must already agree.
bool same_presentation(const GitPresentation& A, const std::vector<IntVector>& LA, const GitPresentation& B,
                       const std::vector<IntVector>& LB);

using IndexSet = std::vector<int>;  // sorted, 0-based

// Calls f on every k-subset of {0..m-1} in lex order.
template <class F>
void for_each_subset(int m, int k, F&& f) {
  if (k > m || k < 0) return;
  IndexSet s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == m - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::string chart_name(const IndexSet& s);  // {0,1} -> "U12"
IndexSet complement(const IndexSet& s, int m);
IntMatrix columns(const IntMatrix& w, const IndexSet& s);

enum class ChartKind { Smooth, Cyclic, NonCyclic, NonQFactorial };

struct QuotientType {
  Int order{1};
  std::vector<Int> weights;  // residues in [0, order)
  std::string label() const;  // "1/2(0,1,1,1)"
};

struct Chart {
  IndexSet indices;
  ChartKind kind = ChartKind::Smooth;
  IndexSet coordinates;  // complementary coordinates the group acts on
  QuotientType type;     // meaningful for Smooth and Cyclic
  std::vector<Int> group;  // invariant factors of the chart group
  bool orbifold() const { return kind != ChartKind::NonQFactorial; }
  std::string describe(const GitPresentation& G) const;
};

Chart classify_chart(const GitPresentation& G, const IndexSet& s);
std::vector<Chart> charts(const GitPresentation& G);

// Smallest unit multiple of weights mod n in lex order, optionally sorted.
QuotientType normalize_cyclic(const Int& n, std::vector<Int> w, bool sort_weights);

struct TorusStratum {
  IndexSet zeros;
  int dim = 0;
  Int stabilizer{1};         // order of the generic stabilizer when finite
  bool finite_stabilizer = true;
  bool orbifold = true;      // covered by a simplicial chart
  std::vector<IndexSet> charts;
  bool singular() const { return !orbifold || !finite_stabilizer || stabilizer != 1; }
  std::string describe(const GitPresentation& G) const;
};

// Torus-orbit strata meeting the semistable locus, indexed by their zero set.
std::vector<TorusStratum> strata(const GitPresentation& G);
std::vector<TorusStratum> singular_strata(const GitPresentation& G, int max_dim);
bool in_closure(const TorusStratum& a, const TorusStratum& b);  // a lies in the closure of b

IntMatrix gale_dual(const GitPresentation& G);
bool is_generic(const GitPresentation& G);
std::vector<IndexSet> fan_from_git(const GitPresentation& G);
GitPresentation perturb_stability(const GitPresentation& G);

std::vector<IntVector> monomial_basis(const GitPresentation& G, const IntVector& lambda);
Polynomial section(const std::vector<IntVector>& monomials, int m, const std::function<Rat(size_t)>& coeff = {});
Polynomial restrict_to_stratum(const Polynomial& f, const IndexSet& zeros);

// Local equations of X near points of a stratum. A candidate is usable at a
// point where `unit` does not vanish; X is then cut out by `equations` there.
struct LocalChart {
  Polynomial unit;
  std::vector<size_t> equations;
};

struct EquationSystem {
  std::vector<Polynomial> equations;  // in the m ambient variables
  std::vector<IntVector> characters;  // weight of each equation
  std::vector<LocalChart> local;      // empty means all equations, everywhere
};

enum class StratumOutcome { Empty, Points, PositiveDimensional, Unverified };

struct StratumReport {
  StratumOutcome outcome = StratumOutcome::Empty;
  IndexSet chart;          // slice x_S = 1 used
  size_t slice_solutions = 0;
  Int index{1};            // [H_S : K]
  size_t points = 0;
  bool quasi_smooth = false;
  bool transversal = false;
  std::optional<QuotientType> type;  // local type of X at each point
  std::string note;
};

StratumReport stratum_solutions(const GitPresentation& G, const EquationSystem& X, const TorusStratum& T,
                                int max_free = 4);

}  // namespace lf
