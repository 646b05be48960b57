#include "bundleseg/lap.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <utility>

namespace bundleseg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const CostMatrix& c) {
  if (c.rows <= 0 || c.cols <= 0) throw EmptyMatrix("cost matrix is empty");
  if (c.values.size() != std::size_t(c.rows) * std::size_t(c.cols))
    throw ShapeError("cost matrix storage does not match its shape");
  for (double v : c.values)
    if (!std::isfinite(v)) throw NonFiniteCost("cost matrix contains a non-finite value");
}

// Jonker-Volgenant over a non-negative working copy, rows <= cols.
// Returns row_to_col; the caller recomputes the cost from the original
// matrix.
std::vector<int> jv(const CostMatrix& c) {
  const int nr = c.rows;
  const int nc = c.cols;

  // offset so all working costs are >= 0; the optimal assignment is
  // unchanged since the shift is uniform
  const double offset = *std::min_element(c.values.begin(), c.values.end());
  std::vector<double> w(c.values);
  for (double& x : w) x -= offset;
  const auto cost = [&](int i, int j) { return w[std::size_t(i) * nc + j]; };

  std::vector<int> rowsol(nr, -1);
  std::vector<int> colsol(nc, -1);
  std::vector<double> v(nc, 0.0);
  std::vector<int> matches(nr, 0);

  // column reduction
  for (int j = nc - 1; j >= 0; --j) {
    double mn = cost(0, j);
    int imin = 0;
    for (int i = 1; i < nr; ++i)
      if (cost(i, j) < mn) {
        mn = cost(i, j);
        imin = i;
      }
    v[j] = mn;
    if (++matches[imin] == 1) {
      rowsol[imin] = j;
      colsol[j] = imin;
    }
  }

  // reduction transfer
  std::vector<int> free_rows;
  free_rows.reserve(nr);
  for (int i = 0; i < nr; ++i) {
    if (matches[i] == 0) {
      free_rows.push_back(i);
    } else if (matches[i] == 1 && nc > 1) {
      const int j1 = rowsol[i];
      double mn = kInf;
      for (int j = 0; j < nc; ++j)
        if (j != j1) mn = std::min(mn, cost(i, j) - v[j]);
      v[j1] -= mn;
    }
  }

  // augmenting row reduction, two passes
  for (int pass = 0; pass < 2 && !free_rows.empty(); ++pass) {
    std::vector<int> next_free;
    std::size_t k = 0;
    while (k < free_rows.size()) {
      const int i = free_rows[k++];
      double umin = cost(i, 0) - v[0];
      int j1 = 0;
      double usubmin = kInf;
      int j2 = -1;
      for (int j = 1; j < nc; ++j) {
        const double h = cost(i, j) - v[j];
        if (h < usubmin) {
          if (h >= umin) {
            usubmin = h;
            j2 = j;
          } else {
            usubmin = umin;
            j2 = j1;
            umin = h;
            j1 = j;
          }
        }
      }
      int displaced = colsol[j1];
      if (umin < usubmin) {
        v[j1] -= usubmin - umin;
      } else if (displaced >= 0 && j2 >= 0) {
        j1 = j2;
        displaced = colsol[j1];
      }
      rowsol[i] = j1;
      colsol[j1] = i;
      if (displaced >= 0) {
        rowsol[displaced] = -1;
        if (umin < usubmin)
          free_rows[--k] = displaced;  // retry immediately
        else
          next_free.push_back(displaced);
      }
    }
    free_rows = std::move(next_free);
  }

  // shortest augmenting path for each remaining unassigned row
  std::vector<double> d(nc);
  std::vector<int> pred(nc);
  std::vector<int> collist(nc);
  for (const int freerow : free_rows) {
    for (int j = 0; j < nc; ++j) {
      d[j] = cost(freerow, j) - v[j];
      pred[j] = freerow;
      collist[j] = j;
    }
    int low = 0, up = 0, last = -1;
    int endofpath = -1;
    double mind = 0.0;
    bool found = false;
    while (!found) {
      if (up == low) {
        // refill the candidate set with the columns of minimal d
        last = low - 1;
        mind = d[collist[up++]];
        for (int k = up; k < nc; ++k) {
          const int j = collist[k];
          const double h = d[j];
          if (h <= mind) {
            if (h < mind) {
              up = low;
              mind = h;
            }
            collist[k] = collist[up];
            collist[up++] = j;
          }
        }
        for (int k = low; k < up; ++k) {
          const int j = collist[k];
          if (colsol[j] < 0) {
            endofpath = j;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        const int j1 = collist[low++];
        const int i = colsol[j1];
        const double h = cost(i, j1) - v[j1] - mind;
        for (int k = up; k < nc; ++k) {
          const int j = collist[k];
          const double v2 = cost(i, j) - v[j] - h;
          if (v2 < d[j]) {
            pred[j] = i;
            if (v2 == mind) {
              if (colsol[j] < 0) {
                endofpath = j;
                found = true;
                break;
              }
              collist[k] = collist[up];
              collist[up++] = j;
            }
            d[j] = v2;
          }
        }
      }
    }
    // update column prices along the scanned set
    for (int k = 0; k <= last; ++k) {
      const int j = collist[k];
      v[j] += d[j] - mind;
    }
    // augment along the alternating path back to freerow
    int j = endofpath;
    while (true) {
      const int i = pred[j];
      colsol[j] = i;
      std::swap(j, rowsol[i]);
      if (i == freerow) break;
    }
  }

#ifndef NDEBUG
  // dual feasibility: reduced costs non-negative, zero on assigned pairs
  for (int i = 0; i < nr; ++i) {
    const double u = cost(i, rowsol[i]) - v[rowsol[i]];
    for (int j = 0; j < nc; ++j)
      assert(cost(i, j) - u - v[j] >= -kDualFeasibilityEpsilon);
  }
#endif

  return rowsol;
}

Assignment with_recomputed_cost(const CostMatrix& c, std::vector<int> row_to_col) {
  Assignment a;
  a.row_to_col = std::move(row_to_col);
  a.total_cost = 0.0;
  for (int i = 0; i < c.rows; ++i) a.total_cost += c.at(i, a.row_to_col[i]);
  return a;
}

}  // namespace

Assignment solve_lap(const CostMatrix& c) {
  validate(c);
  if (c.rows != c.cols)
    throw ShapeError("solve_lap requires a square matrix, got " + std::to_string(c.rows) + "x" +
                     std::to_string(c.cols));
  return with_recomputed_cost(c, jv(c));
}

Assignment solve_rlap(const CostMatrix& c) {
  validate(c);
  if (c.rows > c.cols)
    throw ShapeError("solve_rlap requires rows <= cols, got " + std::to_string(c.rows) + "x" +
                     std::to_string(c.cols));
  return with_recomputed_cost(c, jv(c));
}

Assignment solve_rlap_via_padding(const CostMatrix& c) {
  validate(c);
  if (c.rows > c.cols)
    throw ShapeError("solve_rlap_via_padding requires rows <= cols");
  CostMatrix padded = CostMatrix::zeros(c.cols, c.cols);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) padded.at(i, j) = c.at(i, j);
  const Assignment full = solve_lap(padded);
  std::vector<int> row_to_col(full.row_to_col.begin(), full.row_to_col.begin() + c.rows);
  return with_recomputed_cost(c, std::move(row_to_col));
}

Assignment brute_force_lap(const CostMatrix& c) {
  validate(c);
  if (c.rows > c.cols) throw ShapeError("brute_force_lap requires rows <= cols");

  double injections = 1.0;
  for (int i = 0; i < c.rows; ++i) injections *= double(c.cols - i);
  if (injections > 2e6)
    throw TooLargeForOracle("brute force would enumerate " + std::to_string((long long)injections) +
                            " injections");

  // lower bound on the cost of completing rows row..L-1, for pruning
  std::vector<double> suffix_min(c.rows + 1, 0.0);
  for (int i = c.rows - 1; i >= 0; --i) {
    double rm = kInf;
    for (int j = 0; j < c.cols; ++j) rm = std::min(rm, c.at(i, j));
    suffix_min[i] = suffix_min[i + 1] + rm;
  }

  std::vector<int> current(c.rows, -1), best(c.rows, -1);
  std::vector<bool> used(c.cols, false);
  double best_cost = kInf;

  // depth-first over rows, columns in ascending order; pruning is strict
  // so the first optimum found (lexicographically smallest) is kept
  auto recurse = [&](auto&& self, int row, double acc) -> void {
    if (row == c.rows) {
      if (acc < best_cost) {
        best_cost = acc;
        best = current;
      }
      return;
    }
    if (acc + suffix_min[row] > best_cost) return;
    for (int j = 0; j < c.cols; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current[row] = j;
      self(self, row + 1, acc + c.at(row, j));
      used[j] = false;
    }
    current[row] = -1;
  };
  recurse(recurse, 0, 0.0);

  Assignment a;
  a.row_to_col = best;
  a.total_cost = best_cost;
  return a;
}

double assignment_cost(const CostMatrix& c, const Assignment& a) {
  validate(c);
  if (int(a.row_to_col.size()) != c.rows)
    throw ShapeError("assignment has " + std::to_string(a.row_to_col.size()) + " rows, matrix has " +
                     std::to_string(c.rows));
  std::vector<bool> used(c.cols, false);
  double total = 0.0;
  for (int i = 0; i < c.rows; ++i) {
    const int j = a.row_to_col[i];
    if (j < 0 || j >= c.cols) throw ShapeError("assigned column out of range");
    if (used[j]) throw ShapeError("assignment is not injective");
    used[j] = true;
    total += c.at(i, j);
  }
  return total;
}

}  // namespace bundleseg
