#include "orbitope_kit/circle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbitope_kit/error.hpp"

namespace orbitope_kit::circle {

double canonical_angle(double radians) {
  double r = radians - kTwoPi * std::floor(radians / kTwoPi);
  // floor() can leave r == 2pi (or a hair below 0) after rounding.
  if (r >= kTwoPi || r < 0.0) r = 0.0;
  return r;
}

Arc::Arc(CirclePoint a, CirclePoint b, bool closed) : a_(a), b_(b), closed_(closed) {
  if (!closed && a == b) throw Error("degenerate-arc", "open arc needs distinct endpoints");
}

double Arc::length() const {
  if (a_ == b_) return 0.0;
  return a_.angle() < b_.angle() ? b_.angle() - a_.angle() : b_.angle() + kTwoPi - a_.angle();
}

bool Arc::contains(CirclePoint t) const {
  const double a = a_.angle();
  const double b = b_.angle();
  const double x = t.angle();
  if (a == b) return closed_ && x == a;
  if (a < b) return closed_ ? (a <= x && x <= b) : (a < x && x < b);
  // a > b: the arc passes through angle zero; lift x by 2pi when below a.
  const double lifted = x < a ? x + kTwoPi : x;
  const double top = b + kTwoPi;
  return closed_ ? (a <= lifted && lifted <= top) : (a < lifted && lifted < top);
}

Configuration Configuration::from_angles(std::span<const double> radians) {
  std::vector<CirclePoint> pts;
  pts.reserve(radians.size());
  for (double r : radians) pts.emplace_back(r);
  return Configuration(std::move(pts));
}

std::vector<double> Configuration::angles() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.angle());
  return out;
}

bool Configuration::is_counterclockwise() const {
  if (points_.size() < 2) return true;
  const double base = points_.front().angle();
  double prev = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double rel = canonical_angle(points_[i].angle() - base);
    if (rel <= prev) return false;
    prev = rel;
  }
  return true;
}

double geodesic_dist(CirclePoint a, CirclePoint b) {
  const double d = std::abs(a.angle() - b.angle());
  return std::min(d, kTwoPi - d);
}

double diameter(std::span<const CirclePoint> x) {
  if (x.empty()) throw Error("empty-configuration", "diameter of an empty set");
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) best = std::max(best, geodesic_dist(x[i], x[j]));
  return best;
}

double diameter(const Configuration& x) { return diameter(std::span(x.points())); }

bool arc_contains(const Arc& arc, CirclePoint t) { return arc.contains(t); }

void require_generic(std::span<const CirclePoint> x, double eps) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = geodesic_dist(x[i], x[j]);
      if (d <= eps || d >= kPi - eps) {
        throw Error("degenerate-configuration",
                    "points " + std::to_string(i) + " and " + std::to_string(j) +
                        (d <= eps ? " coincide" : " are antipodal"));
      }
    }
  }
}

namespace {

int chi_unchecked(std::span<const CirclePoint> x, std::size_t i) {
  const Arc back_half(x[i].antipode(), x[i], false);
  int count = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i && back_half.contains(x[j])) ++count;
  return count;
}

}  // namespace

int chi_count(const Configuration& x, std::size_t i) {
  if (i >= x.size()) throw Error("index-out-of-range", "chi index " + std::to_string(i));
  require_generic(x.points());
  return chi_unchecked(x.points(), i);
}

std::vector<int> chi_counts(const Configuration& x) {
  require_generic(x.points());
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = chi_unchecked(x.points(), i);
  return out;
}

Configuration sort_ccw(std::vector<CirclePoint> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const CirclePoint& a, const CirclePoint& b) { return a.angle() < b.angle(); });
  return Configuration(std::move(points));
}

Configuration regular_polygon(int n, double offset) {
  std::vector<CirclePoint> pts;
  pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) pts.emplace_back(offset + kTwoPi * i / n);
  return Configuration(std::move(pts));
}

}  // namespace orbitope_kit::circle
