#pragma once

#include <Eigen/Dense>
#include <vector>

namespace orbitope_kit::lp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(Status s);

/// minimize c^T x  subject to  A x = b,  x >= 0.
struct Problem {
  Matrix A;
  Vector b;
  Vector c;
};

struct Options {
  double pivot_tol = 1e-11;
  double cost_tol = 1e-10;
  /// Phase-one objective above this (scaled by max(1, |b|_inf)) means infeasible.
  double feasibility_tol = 1e-9;
  int max_iterations = 200000;
};

struct Result {
  Status status = Status::kIterationLimit;
  Vector x;       ///< primal solution (phase-one point when infeasible)
  Vector duals;   ///< y with A^T y <= c (up to tolerance) at optimality
  Vector farkas;  ///< infeasible only: A^T y <= 0 and b^T y > 0
  double objective = 0.0;
  double infeasibility = 0.0;  ///< optimal phase-one objective
  std::vector<int> basis;      ///< basic column per row; >= A.cols() marks a redundant row
  int iterations = 0;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule. The final
/// basic solution and duals are recomputed from the basis by LU to shed
/// accumulated tableau error.
Result solve(const Problem& problem, const Options& options = {});

}  // namespace orbitope_kit::lp
