#include "mvhota/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvhota {

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) throw std::invalid_argument("CostMatrix: value count does not match shape");
}

CostMatrix build_cost_matrix(std::span<const Point> a, std::span<const Point> b, double alpha,
                             double diagonal_bound) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  CostMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::hypot(a[i].x - b[j].x, a[i].y - b[j].y);
      m(i, j) = d < alpha ? d : diagonal_bound;
    }
  }
  return m;
}

namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

// Square problem padded with zero-cost dummies, solved by shortest augmenting
// paths with dual potentials. After solve(), row_match/col_match hold an
// optimal perfect matching and reduced(r, c) >= 0 with equality on it.
class Hungarian {
 public:
  explicit Hungarian(const CostMatrix& m)
      : n_(std::max(m.rows(), m.cols())), cost_(n_ * n_, 0.0), u_(n_ + 1, 0.0), v_(n_ + 1, 0.0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) cost_[r * n_ + c] = m(r, c);
  }

  void solve() {
    // 1-based column bookkeeping; column 0 is the virtual root.
    std::vector<std::size_t> p(n_ + 1, 0), way(n_ + 1, 0);
    const double inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= n_; ++i) {
      p[0] = i;
      std::size_t j0 = 0;
      std::vector<double> minv(n_ + 1, inf);
      std::vector<char> used(n_ + 1, 0);
      do {
        used[j0] = 1;
        const std::size_t i0 = p[j0];
        double delta = inf;
        std::size_t j1 = 0;
        for (std::size_t j = 1; j <= n_; ++j) {
          if (used[j]) continue;
          const double cur = cost_[(i0 - 1) * n_ + (j - 1)] - u_[i0] - v_[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
        for (std::size_t j = 0; j <= n_; ++j) {
          if (used[j]) {
            u_[p[j]] += delta;
            v_[j] -= delta;
          } else {
            minv[j] -= delta;
          }
        }
        j0 = j1;
      } while (p[j0] != 0);
      do {
        const std::size_t j1 = way[j0];
        p[j0] = p[j1];
        j0 = j1;
      } while (j0 != 0);
    }

    row_match_.assign(n_, kUnmatched);
    col_match_.assign(n_, kUnmatched);
    for (std::size_t j = 1; j <= n_; ++j) {
      row_match_[p[j] - 1] = j - 1;
      col_match_[j - 1] = p[j] - 1;
    }

    double scale = 1.0;
    for (double c : cost_) scale = std::max(scale, std::abs(c));
    tolerance_ = 1e-9 * scale;
  }

  // Re-selects, among perfect matchings on zero-reduced-cost edges (exactly
  // the optimal assignments), the lexicographically smallest one.
  void make_lexicographic() {
    fixed_row_.assign(n_, 0);
    fixed_col_.assign(n_, 0);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (fixed_col_[c] || !tight(r, c)) continue;
        if (row_match_[r] == c || reroute(r, c)) {
          fixed_row_[r] = 1;
          fixed_col_[c] = 1;
          break;
        }
      }
      if (!fixed_row_[r]) {
        // Numerical corner: keep the solver's own choice.
        fixed_row_[r] = 1;
        fixed_col_[row_match_[r]] = 1;
      }
    }
  }

  const std::vector<std::size_t>& row_match() const { return row_match_; }

 private:
  bool tight(std::size_t r, std::size_t c) const {
    return cost_[r * n_ + c] - u_[r + 1] - v_[c + 1] <= tolerance_;
  }

  // Forces r -> c while keeping the matching perfect on tight edges.
  bool reroute(std::size_t r, std::size_t c) {
    const std::size_t displaced_row = col_match_[c];
    const std::size_t freed_col = row_match_[r];
    const auto saved_rows = row_match_;
    const auto saved_cols = col_match_;

    row_match_[r] = c;
    col_match_[c] = r;
    row_match_[displaced_row] = kUnmatched;
    col_match_[freed_col] = kUnmatched;

    std::vector<char> visited(n_, 0);
    fixed_row_[r] = 1;
    fixed_col_[c] = 1;
    const bool ok = augment(displaced_row, visited);
    fixed_row_[r] = 0;
    fixed_col_[c] = 0;
    if (!ok) {
      row_match_ = saved_rows;
      col_match_ = saved_cols;
    }
    return ok;
  }

  bool augment(std::size_t row, std::vector<char>& visited) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (fixed_col_[c] || visited[c] || !tight(row, c)) continue;
      visited[c] = 1;
      const std::size_t owner = col_match_[c];
      if (owner == kUnmatched || (!fixed_row_[owner] && augment(owner, visited))) {
        row_match_[row] = c;
        col_match_[c] = row;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<double> cost_;
  std::vector<double> u_, v_;
  std::vector<std::size_t> row_match_, col_match_;
  std::vector<char> fixed_row_, fixed_col_;
  double tolerance_ = 0.0;
};

}  // namespace

Assignment solve_assignment(const CostMatrix& costs) {
  for (double c : costs.values())
    if (!std::isfinite(c) || c < 0.0) throw std::invalid_argument("cost entries must be finite and non-negative");

  Assignment result;
  if (costs.rows() == 0 || costs.cols() == 0) return result;

  Hungarian solver(costs);
  solver.solve();
  solver.make_lexicographic();

  const auto& match = solver.row_match();
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    const std::size_t c = match[r];
    if (c < costs.cols()) {
      result.pairs.emplace_back(r, c);
      result.total_cost += costs(r, c);
    }
  }
  return result;
}

}  // namespace mvhota
