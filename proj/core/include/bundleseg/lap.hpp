#ifndef BUNDLESEG_LAP_HPP
#define BUNDLESEG_LAP_HPP

#include <vector>

#include "bundleseg/errors.hpp"

namespace bundleseg {

// Dense cost matrix, row-major. Rectangular convention: rows are the
// example streamlines, columns the candidates, rows <= cols.
struct CostMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  static CostMatrix zeros(int rows, int cols) {
    return {rows, cols, std::vector<double>(std::size_t(rows) * std::size_t(cols), 0.0)};
  }
  double at(int r, int c) const { return values[std::size_t(r) * cols + c]; }
  double& at(int r, int c) { return values[std::size_t(r) * cols + c]; }
};

// An injective row -> column map plus its total cost under the matrix it
// was solved against. total_cost is always recomputable via
// assignment_cost().
struct Assignment {
  std::vector<int> row_to_col;
  double total_cost = 0.0;
};

// Solves the square linear assignment problem with the Jonker-Volgenant
// algorithm (column reduction, augmenting row reduction, shortest
// augmenting paths). Deterministic: ties are broken by fixed scan order.
Assignment solve_lap(const CostMatrix& c);

// Rectangular variant (rows <= cols): assigns every row to a distinct
// column, minimising total cost over all injections. Same phases as
// solve_lap, with the augmenting stage stopping once all rows are
// assigned.
Assignment solve_rlap(const CostMatrix& c);

// Reference path for solve_rlap: pads the matrix to square with
// zero-cost rows, which leaves the optimum over the real rows unchanged.
// Kept as a second oracle for tests; quadratic in cols.
Assignment solve_rlap_via_padding(const CostMatrix& c);

// Exhaustive minimum over all row->column injections, first-found tie
// break in lexicographic order. Test oracle only; guarded against
// factorial blowup (throws TooLargeForOracle).
Assignment brute_force_lap(const CostMatrix& c);

// Recomputes the total cost of `a` under `c`.
double assignment_cost(const CostMatrix& c, const Assignment& a);

// Absolute tolerance on the dual-feasibility post-condition the solver
// asserts in debug builds (fused costs are normalised to order 1, see
// segmentation).
inline constexpr double kDualFeasibilityEpsilon = 1e-10;

}  // namespace bundleseg

#endif
