#pragma once

// Dense two-phase simplex for min c^T x s.t. A x = b, x >= 0. Bland's rule.
// Test oracle only; sized for a handful of rows and a few thousand columns.

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <vector>

namespace oracle {

struct LpResult {
  double value = 0.0;
  Eigen::VectorXd x;
};

inline std::optional<LpResult> simplex_min(const Eigen::MatrixXd& a_in, const Eigen::VectorXd& b_in,
                                           const Eigen::VectorXd& c) {
  const int m = int(a_in.rows());
  const int n = int(a_in.cols());
  Eigen::MatrixXd a = a_in;
  Eigen::VectorXd b = b_in;
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) {
      a.row(i) *= -1.0;
      b(i) *= -1.0;
    }
  // tableau columns: n originals, m artificials, rhs
  const int cols = n + m;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, cols + 1);
  t.leftCols(n) = a;
  t.block(0, n, m, m).setIdentity();
  t.col(cols) = b;
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[std::size_t(i)] = n + i;

  const double eps = 1e-12;
  auto run = [&](const Eigen::VectorXd& cost, int allowed) {
    for (int iter = 0; iter < 100000; ++iter) {
      // reduced costs
      Eigen::VectorXd cb(m);
      for (int i = 0; i < m; ++i) cb(i) = cost(basis[std::size_t(i)]);
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        const double rc = cost(j) - cb.dot(t.col(j));
        if (rc < -eps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i)
        if (t(i, enter) > eps) {
          const double r = t(i, cols) / t(i, enter);
          if (r < best - eps || (r <= best + eps && leave >= 0 &&
                                 basis[std::size_t(i)] < basis[std::size_t(leave)])) {
            best = r;
            leave = i;
          }
        }
      if (leave < 0) return false;  // unbounded
      t.row(leave) /= t(leave, enter);
      for (int i = 0; i < m; ++i)
        if (i != leave) t.row(i) -= t(i, enter) * t.row(leave);
      basis[std::size_t(leave)] = enter;
    }
    return false;
  };

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols);
  phase1.tail(m).setOnes();
  if (!run(phase1, cols)) return std::nullopt;
  double infeas = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[std::size_t(i)] >= n) infeas += t(i, cols);
  if (infeas > 1e-9) return std::nullopt;
  // drive remaining (zero-level) artificials out of the basis
  for (int i = 0; i < m; ++i)
    if (basis[std::size_t(i)] >= n)
      for (int j = 0; j < n; ++j)
        if (std::abs(t(i, j)) > 1e-9) {
          t.row(i) /= t(i, j);
          for (int k = 0; k < m; ++k)
            if (k != i) t.row(k) -= t(k, j) * t.row(i);
          basis[std::size_t(i)] = j;
          break;
        }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(cols);
  phase2.head(n) = c;
  if (!run(phase2, n)) return std::nullopt;
  LpResult res;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[std::size_t(i)] < n) res.x(basis[std::size_t(i)]) = t(i, cols);
  res.value = c.dot(res.x);
  return res;
}

}  // namespace oracle
