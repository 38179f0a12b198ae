#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "orbitope_kit/circle.hpp"

namespace orbitope_kit::raked {

using Vector = Eigen::VectorXd;
using circle::Arc;
using circle::CirclePoint;
using circle::Configuration;

/// p(t) = sum_j a_j cos((2j-1)t) + b_j sin((2j-1)t), j = 1..k.
struct RakedPolynomial {
  int k = 1;
  std::vector<double> a;  ///< cosine coefficients, frequencies 1, 3, ..., 2k-1
  std::vector<double> b;  ///< sine coefficients

  /// Throws "invalid-order" (k < 1) or "dimension-mismatch".
  static RakedPolynomial make(std::vector<double> a, std::vector<double> b);

  /// Reads (a_1, b_1, ..., a_k, b_k) from an interleaved vector of even size.
  static RakedPolynomial from_interleaved(const Vector& z);

  /// Interleaved (a_1, b_1, ..., a_k, b_k); p(t) = coefficients() . sm(k, t).
  Vector coefficients() const;

  bool is_zero() const;
};

double eval(const RakedPolynomial& p, double t);
inline double eval(const RakedPolynomial& p, CirclePoint t) { return eval(p, t.angle()); }

/// prod_l sin(v_l - t) for 2k-1 roots, in coefficient form. Vanishes exactly
/// at the v_l and their antipodes and changes sign at each of them.
/// Errors: "invalid-cardinality" (even or zero count), "degenerate-roots".
RakedPolynomial from_roots(std::span<const CirclePoint> roots);

/// Polynomial t -> z . sm(k, t). Throws "dimension-mismatch" unless |z| = 2k.
RakedPolynomial separating_poly(int k, const Vector& z);

struct SetMinimum {
  double value = 0.0;
  CirclePoint argmin;
  std::size_t index = 0;
};

/// Smallest value over a finite set; first index wins ties.
/// Throws "empty-configuration".
SetMinimum min_on_set(const RakedPolynomial& p, const Configuration& x);

struct SignArc {
  Arc arc;
  int sign = 0;  ///< +1 or -1
};

/// Maximal open arcs of constant sign, starting at the smallest sign change.
/// Sign changes are bracketed on a uniform grid and bisected below 1e-12.
/// The zero polynomial gives an empty list. Throws "grid-too-coarse" when
/// grid < 8k.
std::vector<SignArc> sign_pattern(const RakedPolynomial& p, int grid);

/// The sign-change locations found by sign_pattern, sorted by angle.
std::vector<double> sign_changes(const RakedPolynomial& p, int grid);

}  // namespace orbitope_kit::raked
