#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbitope_kit/circle.hpp"

namespace orbitope_kit::moment {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using circle::CirclePoint;
using circle::Configuration;

/// Pairs closer than this in |sin(t_l - t_j)| are rejected as degenerate.
inline constexpr double kMinPairSine = 1e-6;

/// Centrally symmetric moment curve point
/// (cos t, sin t, cos 3t, sin 3t, ..., cos (2k-1)t, sin (2k-1)t).
/// Throws "invalid-order" for k < 1.
Vector sm(int k, CirclePoint t);
Vector sm(int k, double t);

/// Derivative of sm with respect to t.
Vector sm_derivative(int k, double t);

/// 2k x n matrix whose columns are sm(k, points[j]).
struct MomentMatrix {
  int k = 0;
  Configuration source_angles;
  Matrix columns;
};

MomentMatrix moment_matrix(int k, const Configuration& points);

/// prod_{j<l} sin(t_l - t_j) in listed order. Needs an even, nonzero count.
double sine_product(const Configuration& points);

/// Determinant of the 2k x 2k moment matrix by LU with partial pivoting.
double det_direct(const Configuration& points, int k);

/// Closed-form kernel of the 2k x (2k+1) moment matrix.
struct NullspaceVector {
  std::vector<double> lambda;  ///< (-1)^i prod_{j<l; j,l != i} sin(t_l - t_j)
  std::vector<double> alpha;   ///< prod_{j != i} sin(t_j - t_i)

  /// lambda scaled to sum to one; meaningful when all entries share a sign.
  std::vector<double> normalized() const;
  bool same_sign() const;
};

/// Throws "invalid-cardinality" unless |points| == 2k+1 and
/// "degenerate-configuration" for equal/antipodal (or nearly so) pairs.
NullspaceVector nullspace_lambda(const Configuration& points, int k);

/// chi(t_i) == k for every i. Cross-checks against the signs of alpha and
/// throws InternalError on disagreement.
bool same_sign_condition(const Configuration& points, int k);

/// Singular values of a moment matrix in decreasing order.
Vector singular_values(const Matrix& m);

}  // namespace orbitope_kit::moment
