#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Minimum of |a - b + 2 pi m| over a range of lifts.
inline double lift_distance(double a, double b) {
  double best = INFINITY;
  for (int m = -3; m <= 3; ++m) best = std::min(best, std::abs(a - b + kTwoPi * m));
  return best;
}

/// Open arc membership: lift t and b into [a, a + 2 pi) and compare.
inline bool in_open_arc(double a, double b, double t) {
  auto lift = [a](double x) {
    while (x < a) x += kTwoPi;
    while (x >= a + kTwoPi) x -= kTwoPi;
    return x;
  };
  const double bl = lift(b);
  const double tl = lift(t);
  return tl > a && tl < bl;
}

inline int chi(const std::vector<double>& t, std::size_t i) {
  int c = 0;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != i && in_open_arc(t[i] + kPi, t[i], t[j])) ++c;
  return c;
}

inline double pairwise_sine_product(const std::vector<double>& t) {
  double p = 1.0;
  for (std::size_t l = 0; l < t.size(); ++l)
    for (std::size_t j = 0; j < l; ++j) p *= std::sin(t[l] - t[j]);
  return p;
}

/// Random configuration with all pairs at least `sep` away from coincidence
/// and antipodality.
inline std::vector<double> generic_angles(std::mt19937_64& g, std::size_t n, double sep = 0.02) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  while (true) {
    std::vector<double> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(u(g));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        const double d = lift_distance(t[i], t[j]);
        if (d < sep || kPi - d < sep) ok = false;
      }
    if (ok) return t;
  }
}

/// Gaussian elimination determinant with full pivoting on a copy.
inline double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t q = c; q < n; ++q) a[r][q] -= f * a[c][q];
    }
  }
  return det;
}

inline std::vector<double> curve(int k, double t) {
  std::vector<double> v;
  for (int j = 0; j < k; ++j) {
    v.push_back(std::cos((2 * j + 1) * t));
    v.push_back(std::sin((2 * j + 1) * t));
  }
  return v;
}

}  // namespace oracle
