#include "orbitope_kit/thickening.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbitope_kit/caratheodory.hpp"
#include "orbitope_kit/error.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/simplex.hpp"

namespace orbitope_kit::thickening {

using circle::kTwoPi;

DiscreteMeasure DiscreteMeasure::canonical(std::vector<Atom> atoms) {
  std::erase_if(atoms, [](const Atom& a) { return a.weight < kMinWeight; });
  if (atoms.empty()) throw Error("invalid-weights", "measure has no atom of positive weight");
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.point.angle() < b.point.angle(); });
  std::vector<Atom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && circle::geodesic_dist(merged.back().point, a.point) <= kMergeRadius)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  if (merged.size() > 1 && circle::geodesic_dist(merged.back().point, merged.front().point) <= kMergeRadius) {
    merged.front().weight += merged.back().weight;
    merged.pop_back();
  }
  double total = 0.0;
  for (const auto& a : merged) total += a.weight;
  for (auto& a : merged) a.weight /= total;
  return DiscreteMeasure(std::move(merged));
}

DiscreteMeasure DiscreteMeasure::make(const std::vector<CirclePoint>& points, const std::vector<double>& weights) {
  if (points.size() != weights.size())
    throw Error("invalid-weights", "got " + std::to_string(points.size()) + " points and " +
                                       std::to_string(weights.size()) + " weights");
  if (points.empty()) throw Error("invalid-weights", "measure needs at least one atom");
  double total = 0.0;
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0) throw Error("invalid-weights", "weights must be finite and nonnegative");
    total += w;
    atoms.push_back({points[i], w});
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error("invalid-weights", "weights must sum to 1");
  return canonical(std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::dirac(CirclePoint t) { return DiscreteMeasure({{t, 1.0}}); }

DiscreteMeasure DiscreteMeasure::mixture(const DiscreteMeasure& a, const DiscreteMeasure& b, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error("invalid-parameter", "mixture parameter must lie in [0, 1]");
  std::vector<Atom> atoms;
  for (const auto& x : a.atoms_) atoms.push_back({x.point, (1.0 - s) * x.weight});
  for (const auto& x : b.atoms_) atoms.push_back({x.point, s * x.weight});
  return canonical(std::move(atoms));
}

Configuration DiscreteMeasure::support() const {
  std::vector<CirclePoint> pts;
  pts.reserve(atoms_.size());
  for (const auto& a : atoms_) pts.push_back(a.point);
  return Configuration(std::move(pts));
}

std::vector<double> DiscreteMeasure::weights() const {
  std::vector<double> w;
  w.reserve(atoms_.size());
  for (const auto& a : atoms_) w.push_back(a.weight);
  return w;
}

double DiscreteMeasure::support_diameter() const { return circle::diameter(support()); }

DiscreteMeasure make_measure(const std::vector<CirclePoint>& points, const std::vector<double>& weights, double r) {
  if (!(r >= 0.0)) throw Error("invalid-scale", "scale r must be nonnegative");
  DiscreteMeasure mu = DiscreteMeasure::make(points, weights);
  const double d = mu.support_diameter();
  if (d > r + 1e-12)
    throw Error("diameter-exceeds-scale", "support diameter " + std::to_string(d) + " exceeds r = " +
                                              std::to_string(r));
  return mu;
}

// ---------------------------------------------------------------------------

TransportPlan wasserstein1_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const auto m = static_cast<Eigen::Index>(mu.size());
  const auto n = static_cast<Eigen::Index>(nu.size());
  lp::Problem p{Eigen::MatrixXd::Zero(m + n, m * n), Eigen::VectorXd::Zero(m + n), Eigen::VectorXd::Zero(m * n)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index col = i * n + j;
      p.A(i, col) = 1.0;
      p.A(m + j, col) = 1.0;
      p.c[col] = circle::geodesic_dist(mu.atoms()[static_cast<std::size_t>(i)].point,
                                       nu.atoms()[static_cast<std::size_t>(j)].point);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) p.b[i] = mu.atoms()[static_cast<std::size_t>(i)].weight;
  for (Eigen::Index j = 0; j < n; ++j) p.b[m + j] = nu.atoms()[static_cast<std::size_t>(j)].weight;

  const lp::Result res = lp::solve(p);
  if (res.status != lp::Status::kOptimal)
    throw InternalError(std::string("transportation LP ended with status ") + lp::to_string(res.status));
  TransportPlan plan;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double mass = res.x[i * n + j];
      if (mass <= 1e-15) continue;
      plan.entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), mass});
      plan.cost += mass * p.c[i * n + j];
    }
  }
  return plan;
}

TransportPlan wasserstein1(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (mu.size() != 1 && nu.size() != 1) return wasserstein1_lp(mu, nu);
  // Every coupling with a single-atom marginal is the product coupling.
  TransportPlan plan;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const double mass = mu.atoms()[i].weight * nu.atoms()[j].weight;
      plan.entries.push_back({i, j, mass});
      plan.cost += mass * circle::geodesic_dist(mu.atoms()[i].point, nu.atoms()[j].point);
    }
  }
  return plan;
}

Vector pushforward_sm(int k, const DiscreteMeasure& mu) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  Vector x = Vector::Zero(2 * k);
  for (const auto& a : mu.atoms()) x += a.weight * moment::sm(k, a.point);
  if (x.norm() < 1e-12 && mu.support_diameter() < caratheodory::miss_origin_bound(k) - circle::kAngleEps)
    throw InternalError("pushforward vanished on a support narrower than 2 pi k/(2k+1)");
  return x;
}

DiscreteMeasure homotopy_step(const DiscreteMeasure& mu, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error("invalid-parameter", "homotopy parameter must lie in [0, 1]");
  if (mu.support_diameter() > kHomotopyScale + 1e-12)
    throw Error("diameter-exceeds-scale", "homotopy is defined on VR(S^1; 2pi/3)");
  const auto target = orbitope::iota(orbitope::radial_project(pushforward_sm(2, mu)));
  DiscreteMeasure out = DiscreteMeasure::mixture(mu, target, s);
  if (out.support_diameter() > kHomotopyScale + 1e-8)
    throw Error("homotopy-not-well-defined",
                "step left VR(S^1; 2pi/3): diameter " + std::to_string(out.support_diameter()));
  return out;
}

DiscreteMeasure random_measure(Rng& rng, double r) {
  const int size = 1 + static_cast<int>(rng.index(6));
  const double start = rng.uniform(0.0, kTwoPi);
  std::vector<CirclePoint> pts;
  std::vector<double> ws;
  double total = 0.0;
  for (int i = 0; i < size; ++i) {
    pts.emplace_back(start + rng.uniform(0.0, r));
    ws.push_back(rng.exponential());
    total += ws.back();
  }
  for (double& w : ws) w /= total;
  return DiscreteMeasure::make(pts, ws);
}

double union_diameter_excess(int k, const DiscreteMeasure& mu, int grid) {
  const Vector x = pushforward_sm(k, mu);
  const orbitope::GaugeResult g = orbitope::gauge(x, grid);
  std::vector<CirclePoint> pts = mu.support().points();
  for (const auto& a : g.support)
    if (a.weight > 1e-9) pts.push_back(a.point);
  return circle::diameter(pts) - mu.support_diameter();
}

ProbeReport homotopy_probe(int k, double r, int trials, std::uint64_t seed, int grid) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  const double lo = orbitope::edge_arc_bound(k);
  const double hi = caratheodory::miss_origin_bound(k);
  if (!(r >= lo - 1e-12 && r < hi))
    throw Error("invalid-scale", "r must satisfy 2pi(k-1)/(2k-1) <= r < 2pi k/(2k+1)");
  if (trials < 1) throw Error("invalid-parameter", "trials must be >= 1");

  Rng rng(seed);
  ProbeReport report{k, r, trials, 0.0, 0.0, seed};
  double sum = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double e = union_diameter_excess(k, random_measure(rng, r), grid);
    report.max_excess = std::max(report.max_excess, e);
    sum += e;
  }
  report.mean_excess = sum / trials;
  return report;
}

}  // namespace orbitope_kit::thickening
