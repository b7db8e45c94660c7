#include "ssaw/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ssaw::lp {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Tableau rows: m constraints plus one cost row (last). Column layout:
// n structural variables, then artificials in phase 1, RHS last.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())) {
    t_.setZero(m_ + 1, n_ + m_ + 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const double sign = b(i) < 0.0 ? -1.0 : 1.0;
      t_.block(i, 0, 1, n_) = sign * A.row(i);
      t_(i, n_ + i) = 1.0;  // artificial
      t_(i, n_ + m_) = sign * b(i);
      basis_[i] = n_ + i;
    }
  }

  bool phase1() {
    // Cost row: minimize sum of artificials; express in terms of nonbasic vars.
    for (int j = 0; j <= n_ + m_; ++j) {
      double s = 0.0;
      for (int i = 0; i < m_; ++i) s += t_(i, j);
      t_(m_, j) = -s;
    }
    for (int i = 0; i < m_; ++i) t_(m_, basis_[i]) = 0.0;
    iterate(n_ + m_);
    return -t_(m_, n_ + m_) <= kFeasTol;  // residual infeasibility
  }

  void drop_artificials() {
    // Pivot any artificial still basic out on a structural column; a row with
    // no structural pivot is redundant and gets neutralized.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int piv = -1;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > kPivotTol) {
          piv = j;
          break;
        }
      }
      if (piv >= 0) {
        pivot(i, piv);
      } else {
        t_.row(i).setZero();
        t_(i, n_ + m_) = 0.0;
      }
    }
  }

  void phase2(const Eigen::VectorXd& c) {
    t_.row(m_).setZero();
    t_.block(m_, 0, 1, n_) = c.transpose();
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_ && std::abs(t_(m_, basis_[i])) > 0.0) {
        t_.row(m_) -= t_(m_, basis_[i]) * t_.row(i);
      }
    }
    // Artificial columns stay frozen: never re-enter.
    iterate(n_);
  }

  bool unbounded() const { return unbounded_; }

  Result extract(int n) const {
    Result r;
    r.status = unbounded_ ? Status::kUnbounded : Status::kOptimal;
    r.x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n) r.x(basis_[i]) = t_(i, n_ + m_);
    }
    r.objective = -t_(m_, n_ + m_);
    return r;
  }

 private:
  void iterate(int cols) {
    unbounded_ = false;
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {  // Bland: first negative reduced cost
        if (t_(m_, j) < -kFeasTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double a = t_(i, enter);
        if (a > kPivotTol) {
          const double ratio = t_(i, n_ + m_) / a;
          if (ratio < best - kPivotTol ||
              (ratio < best + kPivotTol &&
               (leave < 0 || basis_[i] < basis_[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) {
        unbounded_ = true;
        return;
      }
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  int m_;
  int n_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  bool unbounded_ = false;
};

}  // namespace

Result solve_standard(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      const Eigen::VectorXd& c) {
  const int n = static_cast<int>(A.cols());
  Tableau tab(A, b);
  if (!tab.phase1()) {
    Result r;
    r.status = Status::kInfeasible;
    return r;
  }
  tab.drop_artificials();
  tab.phase2(c);
  if (tab.unbounded()) {
    Result r;
    r.status = Status::kUnbounded;
    return r;
  }
  return tab.extract(n);
}

InfNormResult min_inf_norm(const Eigen::MatrixXd& M, const Eigen::VectorXd& d) {
  const int n = static_cast<int>(M.rows());
  const int e = static_cast<int>(M.cols());
  if (e == 0) {
    return {d.lpNorm<Eigen::Infinity>() <= kFeasTol, 0.0};
  }
  // Variables [u(e), v(e), t, s(e)], all >= 0, with y = u - v:
  //   M u - M v            = d
  //   u_i + v_i - t + s_i  = 0
  const int cols = 3 * e + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + e, cols);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + e);
  A.block(0, 0, n, e) = M;
  A.block(0, e, n, e) = -M;
  b.head(n) = d;
  for (int i = 0; i < e; ++i) {
    A(n + i, i) = 1.0;
    A(n + i, e + i) = 1.0;
    A(n + i, 2 * e) = -1.0;
    A(n + i, 2 * e + 1 + i) = 1.0;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols);
  c(2 * e) = 1.0;
  const Result r = solve_standard(A, b, c);
  if (r.status != Status::kOptimal) return {false, 0.0};
  return {true, r.objective};
}

}  // namespace ssaw::lp
