#include "orbitope_kit/moment_curve.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "orbitope_kit/error.hpp"

namespace orbitope_kit::moment {

namespace {

void require_order(int k) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1, got " + std::to_string(k));
}

void require_size(const Configuration& points, std::size_t expected) {
  if (points.size() != expected) {
    throw Error("invalid-cardinality", "expected " + std::to_string(expected) + " points, got " +
                                           std::to_string(points.size()));
  }
}

void require_nondegenerate(const Configuration& points) {
  const auto& p = points.points();
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t l = j + 1; l < p.size(); ++l)
      if (std::abs(std::sin(p[l].angle() - p[j].angle())) < kMinPairSine)
        throw Error("degenerate-configuration", "points " + std::to_string(j) + " and " +
                                                    std::to_string(l) +
                                                    " are equal or antipodal");
}

}  // namespace

Vector sm(int k, double t) {
  require_order(k);
  Vector v(2 * k);
  for (int j = 0; j < k; ++j) {
    const double f = 2.0 * j + 1.0;
    v[2 * j] = std::cos(f * t);
    v[2 * j + 1] = std::sin(f * t);
  }
  return v;
}

Vector sm(int k, CirclePoint t) { return sm(k, t.angle()); }

Vector sm_derivative(int k, double t) {
  require_order(k);
  Vector v(2 * k);
  for (int j = 0; j < k; ++j) {
    const double f = 2.0 * j + 1.0;
    v[2 * j] = -f * std::sin(f * t);
    v[2 * j + 1] = f * std::cos(f * t);
  }
  return v;
}

MomentMatrix moment_matrix(int k, const Configuration& points) {
  require_order(k);
  MomentMatrix m{k, points, Matrix(2 * k, static_cast<Eigen::Index>(points.size()))};
  for (std::size_t j = 0; j < points.size(); ++j)
    m.columns.col(static_cast<Eigen::Index>(j)) = sm(k, points[j]);
  return m;
}

double sine_product(const Configuration& points) {
  if (points.empty() || points.size() % 2 != 0)
    throw Error("invalid-cardinality",
                "need an even, nonzero number of points, got " + std::to_string(points.size()));
  double prod = 1.0;
  const auto& p = points.points();
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t l = j + 1; l < p.size(); ++l) prod *= std::sin(p[l].angle() - p[j].angle());
  return prod;
}

double det_direct(const Configuration& points, int k) {
  require_order(k);
  require_size(points, static_cast<std::size_t>(2 * k));
  return moment_matrix(k, points).columns.partialPivLu().determinant();
}

std::vector<double> NullspaceVector::normalized() const {
  const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  std::vector<double> out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) out[i] = lambda[i] / total;
  return out;
}

bool NullspaceVector::same_sign() const {
  bool pos = true;
  bool neg = true;
  for (double a : alpha) {
    pos = pos && a > 0.0;
    neg = neg && a < 0.0;
  }
  return pos || neg;
}

NullspaceVector nullspace_lambda(const Configuration& points, int k) {
  require_order(k);
  require_size(points, static_cast<std::size_t>(2 * k + 1));
  require_nondegenerate(points);

  const auto& t = points.points();
  const std::size_t n = t.size();
  NullspaceVector out;
  out.lambda.resize(n);
  out.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t l = j + 1; l < n; ++l) {
        if (l == i) continue;
        prod *= std::sin(t[l].angle() - t[j].angle());
      }
    }
    out.lambda[i] = (i % 2 == 0) ? prod : -prod;

    double a = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) a *= std::sin(t[j].angle() - t[i].angle());
    out.alpha[i] = a;
  }
  return out;
}

bool same_sign_condition(const Configuration& points, int k) {
  const NullspaceVector ns = nullspace_lambda(points, k);
  const std::vector<int> chi = circle::chi_counts(points);
  bool all_k = true;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    all_k = all_k && chi[i] == k;
    const bool odd = chi[i] % 2 != 0;
    if ((ns.alpha[i] < 0.0) != odd)
      throw InternalError("sign(alpha_i) disagrees with (-1)^chi(t_i) at i = " + std::to_string(i));
  }
  if (all_k != ns.same_sign())
    throw InternalError("chi-uniformity disagrees with sign-uniformity of alpha");
  return all_k;
}

Vector singular_values(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

}  // namespace orbitope_kit::moment
