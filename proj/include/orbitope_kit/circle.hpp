#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace orbitope_kit::circle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance (radians) for "equal" and "antipodal" tests.
inline constexpr double kAngleEps = 1e-9;

/// Reduce an angle to its representative in [0, 2pi).
double canonical_angle(double radians);

/// A point of S^1 = R / 2piZ. The stored angle is always in [0, 2pi).
class CirclePoint {
 public:
  constexpr CirclePoint() = default;
  explicit CirclePoint(double radians) : angle_(canonical_angle(radians)) {}

  double angle() const { return angle_; }

  CirclePoint rotated(double radians) const { return CirclePoint(angle_ + radians); }
  CirclePoint antipode() const { return rotated(kPi); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  double angle_ = 0.0;
};

/// Arc from `a` counterclockwise to `b`. Open arcs need a != b; a closed arc
/// with a == b is the single point.
class Arc {
 public:
  Arc(CirclePoint a, CirclePoint b, bool closed);

  CirclePoint a() const { return a_; }
  CirclePoint b() const { return b_; }
  bool closed() const { return closed_; }

  /// Counterclockwise length from a to b, in (0, 2pi) for a != b.
  double length() const;

  bool contains(CirclePoint t) const;

 private:
  CirclePoint a_;
  CirclePoint b_;
  bool closed_;
};

/// Ordered finite point set on the circle.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<CirclePoint> points) : points_(std::move(points)) {}

  /// Convenience: build from raw radian values.
  static Configuration from_angles(std::span<const double> radians);

  const std::vector<CirclePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const CirclePoint& operator[](std::size_t i) const { return points_[i]; }

  std::vector<double> angles() const;

  /// True when the angles strictly increase after rotating so that
  /// points()[0] sits at angle zero.
  bool is_counterclockwise() const;

 private:
  std::vector<CirclePoint> points_;
};

/// Geodesic distance on the circle of circumference 2pi; in [0, pi].
double geodesic_dist(CirclePoint a, CirclePoint b);

/// Max pairwise geodesic distance. Throws "empty-configuration".
double diameter(const Configuration& x);
double diameter(std::span<const CirclePoint> x);

bool arc_contains(const Arc& arc, CirclePoint t);

/// Throws "degenerate-configuration" when two points coincide or are
/// antipodal within `eps`.
void require_generic(std::span<const CirclePoint> x, double eps = kAngleEps);

/// Number of other points of `x` in the open arc (t_i + pi, t_i).
int chi_count(const Configuration& x, std::size_t i);

/// All chi counts at once (one validation pass).
std::vector<int> chi_counts(const Configuration& x);

/// Counterclockwise order starting from the smallest canonical angle.
Configuration sort_ccw(std::vector<CirclePoint> points);

/// Vertices 2pi i / n + offset, i = 0..n-1.
Configuration regular_polygon(int n, double offset = 0.0);

}  // namespace orbitope_kit::circle
