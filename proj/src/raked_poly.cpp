#include "orbitope_kit/raked_poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbitope_kit/error.hpp"

namespace orbitope_kit::raked {

using circle::kPi;
using circle::kTwoPi;

RakedPolynomial RakedPolynomial::make(std::vector<double> a, std::vector<double> b) {
  if (a.empty()) throw Error("invalid-order", "polynomial needs k >= 1");
  if (a.size() != b.size()) throw Error("dimension-mismatch", "a and b must have k entries each");
  RakedPolynomial p;
  p.k = static_cast<int>(a.size());
  p.a = std::move(a);
  p.b = std::move(b);
  return p;
}

RakedPolynomial RakedPolynomial::from_interleaved(const Vector& z) {
  if (z.size() < 2 || z.size() % 2 != 0)
    throw Error("dimension-mismatch", "interleaved coefficients need even, nonzero length");
  const auto k = z.size() / 2;
  std::vector<double> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    a[static_cast<std::size_t>(j)] = z[2 * j];
    b[static_cast<std::size_t>(j)] = z[2 * j + 1];
  }
  return make(std::move(a), std::move(b));
}

Vector RakedPolynomial::coefficients() const {
  Vector z(2 * k);
  for (int j = 0; j < k; ++j) {
    z[2 * j] = a[static_cast<std::size_t>(j)];
    z[2 * j + 1] = b[static_cast<std::size_t>(j)];
  }
  return z;
}

bool RakedPolynomial::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](double c) { return c == 0.0; }) &&
         std::all_of(b.begin(), b.end(), [](double c) { return c == 0.0; });
}

double eval(const RakedPolynomial& p, double t) {
  double s = 0.0;
  for (int j = 0; j < p.k; ++j) {
    const double f = 2.0 * j + 1.0;
    s += p.a[static_cast<std::size_t>(j)] * std::cos(f * t) + p.b[static_cast<std::size_t>(j)] * std::sin(f * t);
  }
  return s;
}

RakedPolynomial from_roots(std::span<const CirclePoint> roots) {
  const std::size_t n = roots.size();
  if (n == 0 || n % 2 == 0)
    throw Error("invalid-cardinality", "need 2k-1 roots, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = circle::geodesic_dist(roots[i], roots[j]);
      if (d < circle::kAngleEps || kPi - d < circle::kAngleEps)
        throw Error("degenerate-roots", "roots " + std::to_string(i) + " and " + std::to_string(j) +
                                            " coincide or are antipodal");
    }
  }
  const int k = static_cast<int>((n + 1) / 2);

  // Degree 2k-1 < 2k, so the discrete Fourier sums over 4k uniform nodes are
  // exact for every odd frequency up to 2k-1.
  const int nodes = 4 * k;
  std::vector<double> a(static_cast<std::size_t>(k), 0.0), b(static_cast<std::size_t>(k), 0.0);
  for (int m = 0; m < nodes; ++m) {
    const double t = kTwoPi * m / nodes;
    double v = 1.0;
    for (const auto& r : roots) v *= std::sin(r.angle() - t);
    for (int j = 0; j < k; ++j) {
      const double f = 2.0 * j + 1.0;
      a[static_cast<std::size_t>(j)] += v * std::cos(f * t);
      b[static_cast<std::size_t>(j)] += v * std::sin(f * t);
    }
  }
  for (int j = 0; j < k; ++j) {
    a[static_cast<std::size_t>(j)] *= 2.0 / nodes;
    b[static_cast<std::size_t>(j)] *= 2.0 / nodes;
  }
  return RakedPolynomial::make(std::move(a), std::move(b));
}

RakedPolynomial separating_poly(int k, const Vector& z) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  if (z.size() != 2 * k)
    throw Error("dimension-mismatch", "z has dimension " + std::to_string(z.size()) + ", expected " +
                                          std::to_string(2 * k));
  return RakedPolynomial::from_interleaved(z);
}

SetMinimum min_on_set(const RakedPolynomial& p, const Configuration& x) {
  if (x.empty()) throw Error("empty-configuration", "min over an empty set");
  SetMinimum best{eval(p, x[0]), x[0], 0};
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double v = eval(p, x[i]);
    if (v < best.value) best = {v, x[i], i};
  }
  return best;
}

namespace {

int sign_of(double v, double zero) { return v > zero ? 1 : (v < -zero ? -1 : 0); }

double bisect(const RakedPolynomial& p, double lo, double hi) {
  double flo = eval(p, lo);
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval(p, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> sign_changes(const RakedPolynomial& p, int grid) {
  if (grid < 8 * p.k) throw Error("grid-too-coarse", "grid must be >= 8k");
  std::vector<double> roots;
  if (p.is_zero()) return roots;

  double scale = 0.0;
  for (int j = 0; j < p.k; ++j)
    scale += std::abs(p.a[static_cast<std::size_t>(j)]) + std::abs(p.b[static_cast<std::size_t>(j)]);
  const double zero = 1e-14 * scale;

  const double h = kTwoPi / grid;
  std::vector<int> s(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) s[static_cast<std::size_t>(i)] = sign_of(eval(p, h * i), zero);

  for (int i = 0; i < grid; ++i) {
    const int si = s[static_cast<std::size_t>(i)];
    if (si == 0) continue;
    int j = i + 1;
    while (s[static_cast<std::size_t>(j % grid)] == 0) ++j;  // terminates: p is odd, so signs of both kinds occur
    if (s[static_cast<std::size_t>(j % grid)] == si) continue;
    const double r = j == i + 1 ? bisect(p, h * i, h * j) : 0.5 * h * (i + j);
    roots.push_back(circle::canonical_angle(r));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<SignArc> sign_pattern(const RakedPolynomial& p, int grid) {
  const std::vector<double> roots = sign_changes(p, grid);
  std::vector<SignArc> arcs;
  if (roots.empty()) return arcs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double a = roots[i];
    const double b = roots[(i + 1) % roots.size()];
    double len = b - a;
    if (len <= 0.0) len += kTwoPi;
    const int sg = eval(p, a + 0.5 * len) > 0.0 ? 1 : -1;
    arcs.push_back({Arc(CirclePoint(a), CirclePoint(b), false), sg});
  }
  return arcs;
}

}  // namespace orbitope_kit::raked
