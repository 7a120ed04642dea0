#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mvhota/dataset.hpp"

namespace mvhota {

/// Dense row-major matrix of non-negative costs.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col), ascending row
  double total_cost = 0.0;                                 // summed in row order
};

/// Euclidean distance where it is below `alpha`, otherwise `diagonal_bound`.
CostMatrix build_cost_matrix(std::span<const Point> a, std::span<const Point> b, double alpha,
                             double diagonal_bound);

/// Minimum-cost assignment of maximum cardinality (min(rows, cols) pairs).
///
/// Among equal-cost optima the lexicographically smallest (row, col) sequence
/// wins, so results are reproducible. Entries must be finite and non-negative.
Assignment solve_assignment(const CostMatrix& costs);

}  // namespace mvhota
