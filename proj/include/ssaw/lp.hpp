#pragma once

#include <Eigen/Dense>

namespace ssaw::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

// Dense two-phase simplex for  min c'x  s.t.  A x = b, x >= 0.
// Bland's rule throughout, so it terminates on degenerate instances.
// Sized for the small problems this project generates (tens of rows).
Result solve_standard(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      const Eigen::VectorXd& c);

struct InfNormResult {
  bool feasible = false;
  double norm = 0.0;
};

// min ||y||_inf  s.t.  M y = d  (y free).
// Infeasible exactly when d is outside the column space of M.
InfNormResult min_inf_norm(const Eigen::MatrixXd& M, const Eigen::VectorXd& d);

}  // namespace ssaw::lp
