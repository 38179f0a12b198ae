#include "orbitope_kit/orbitope_b4.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "orbitope_kit/error.hpp"
#include "orbitope_kit/log.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/simplex.hpp"

namespace orbitope_kit::orbitope {

using circle::canonical_angle;
using circle::kPi;
using circle::kTwoPi;
using Matrix = Eigen::MatrixXd;

namespace {

constexpr double kThird = kTwoPi / 3.0;
constexpr double kArcSlack = 1e-9;
constexpr double kNewtonTol = 2e-16;
constexpr double kFitTol = 1e-10;
constexpr int kNewtonIterations = 50;
constexpr int kClusterSteps = 3;
constexpr double kMinFaceWeight = 1e-9;

Vector sm4(double t) { return moment::sm(2, t); }
Vector sm4_prime(double t) { return moment::sm_derivative(2, t); }

}  // namespace

const char* to_string(FaceType f) {
  switch (f) {
    case FaceType::kVertex: return "vertex";
    case FaceType::kEdge: return "edge";
    case FaceType::kTriangle: return "triangle";
    case FaceType::kNotAFace: return "not-a-face";
  }
  return "?";
}

FaceType face_type(const Face& f) {
  if (std::holds_alternative<Vertex>(f)) return FaceType::kVertex;
  if (std::holds_alternative<Edge>(f)) return FaceType::kEdge;
  return FaceType::kTriangle;
}

void validate_face(const Face& f) {
  auto fail = [](const std::string& why) { throw Error("invalid-boundary-point", why); };
  if (const auto* v = std::get_if<Vertex>(&f)) {
    if (!std::isfinite(v->t)) fail("vertex angle is not finite");
  } else if (const auto* e = std::get_if<Edge>(&f)) {
    if (!std::isfinite(e->t1) || !std::isfinite(e->t2) || !std::isfinite(e->weight)) fail("non-finite edge data");
    if (!(e->weight > 0.0 && e->weight < 1.0)) fail("edge weight must lie in (0, 1)");
    const double d = circle::geodesic_dist(CirclePoint(e->t1), CirclePoint(e->t2));
    if (d < circle::kAngleEps) fail("edge endpoints coincide");
    if (d > kEdgeArc + kArcSlack) fail("edge spans an arc longer than 2pi/3");
  } else {
    const auto& t = std::get<Triangle>(f);
    if (!std::isfinite(t.t)) fail("triangle angle is not finite");
    if (!(t.w1 > 0.0 && t.w2 > 0.0 && t.w3 > 0.0)) fail("triangle weights must be positive");
    if (std::abs(t.w1 + t.w2 + t.w3 - 1.0) > 1e-9) fail("triangle weights must sum to 1");
  }
}

std::vector<thickening::Atom> face_atoms(const Face& f) {
  if (const auto* v = std::get_if<Vertex>(&f)) return {{CirclePoint(v->t), 1.0}};
  if (const auto* e = std::get_if<Edge>(&f))
    return {{CirclePoint(e->t1), e->weight}, {CirclePoint(e->t2), 1.0 - e->weight}};
  const auto& t = std::get<Triangle>(f);
  return {{CirclePoint(t.t), t.w1}, {CirclePoint(t.t + kThird), t.w2}, {CirclePoint(t.t + 2.0 * kThird), t.w3}};
}

Vector face_coordinates(const Face& f) {
  Vector x = Vector::Zero(4);
  for (const auto& a : face_atoms(f)) x += a.weight * sm4(a.point.angle());
  return x;
}

BoundaryPointB4 make_boundary_point(const Face& f) {
  validate_face(f);
  return {f, face_coordinates(f)};
}

// ---------------------------------------------------------------------------

GaugeResult gauge_lp(const Vector& x, int grid) {
  if (x.size() < 2 || x.size() % 2 != 0)
    throw Error("dimension-mismatch", "gauge needs a vector of even dimension");
  if (x.norm() < 1e-9) throw Error("zero-vector", "gauge of the zero vector is undefined");
  if (grid < 90) throw Error("grid-too-coarse", "gauge grid must be >= 90");
  const int k = static_cast<int>(x.size() / 2);
  const Eigen::Index d = x.size();

  // min sum(mu) with sum mu_i SM(t_i) = x; the optimum is 1 / scale.
  lp::Problem p{Matrix::Zero(d, grid), x, Vector::Ones(grid)};
  const double h = kTwoPi / grid;
  for (int i = 0; i < grid; ++i) p.A.col(i) = moment::sm(k, h * i);
  const lp::Result res = lp::solve(p);
  if (res.status != lp::Status::kOptimal || !(res.objective > 0.0))
    throw InternalError(std::string("gauge LP ended with status ") + lp::to_string(res.status));

  GaugeResult out;
  out.scale = 1.0 / res.objective;
  for (int i = 0; i < grid; ++i) {
    const double w = res.x[i] / res.objective;
    if (w > 1e-12) out.support.push_back({CirclePoint(h * i), w});
  }
  return out;
}

namespace {

struct Cluster {
  double lo = 0.0;  // lifted; hi >= lo
  double hi = 0.0;
  double weight = 0.0;
  double mean = 0.0;
};

std::vector<Cluster> cluster_support(std::vector<thickening::Atom> atoms, double threshold) {
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.point.angle() < b.point.angle(); });
  std::vector<Cluster> out;
  double moment = 0.0;
  for (const auto& a : atoms) {
    const double t = a.point.angle();
    if (out.empty() || t - out.back().hi > threshold) {
      if (!out.empty()) out.back().mean = moment / out.back().weight;
      out.push_back({t, t, 0.0, 0.0});
      moment = 0.0;
    }
    out.back().hi = t;
    out.back().weight += a.weight;
    moment += a.weight * t;
  }
  if (out.empty()) return out;
  out.back().mean = moment / out.back().weight;
  if (out.size() > 1 && out.front().lo + kTwoPi - out.back().hi <= threshold) {
    // The last cluster wraps around into the first.
    Cluster& first = out.front();
    const Cluster& last = out.back();
    const double w = first.weight + last.weight;
    first.mean = (first.weight * first.mean + last.weight * (last.mean - kTwoPi)) / w;
    first.lo = last.lo - kTwoPi;
    first.weight = w;
    out.pop_back();
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.weight > b.weight; });
  return out;
}

// Iterates past the acceptance tolerance down to the rounding floor and keeps
// the best iterate; weakly determined directions (short edges) need it.
bool gauss_newton(Vector& params, const std::function<Vector(const Vector&)>& residual,
                  const std::function<Matrix(const Vector&)>& jacobian) {
  Vector r = residual(params);
  Vector best = params;
  double best_norm = r.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < kNewtonIterations && best_norm > kNewtonTol; ++it) {
    const Vector step = jacobian(params).colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;
    params += step;
    r = residual(params);
    const double norm = r.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(norm)) break;
    if (norm <= best_norm) {
      best = params;
      best_norm = norm;
    }
  }
  params = best;
  return best_norm <= kFitTol;
}

struct Fit {
  Face face;
  double scale = 0.0;
};

std::optional<Fit> fit_vertex(const Vector& x, double t0, double s0) {
  Vector p(2);
  p << t0, s0;
  auto res = [&](const Vector& q) -> Vector { return sm4(q[0]) - q[1] * x; };
  auto jac = [&](const Vector& q) -> Matrix {
    Matrix j(4, 2);
    j.col(0) = sm4_prime(q[0]);
    j.col(1) = -x;
    return j;
  };
  if (!gauss_newton(p, res, jac)) return std::nullopt;
  return Fit{Vertex{canonical_angle(p[0])}, p[1]};
}

// Edge parameters: first moment m = w t1 + (1 - w) t2, half-length d and
// e = (2w - 1) d, so t1 = m + e - d and t2 = m + e + d. Unlike (t1, t2, w)
// these stay well conditioned as the edge shrinks.
std::optional<Fit> fit_edge(const Vector& x, double t1, double t2, double w0, double s0) {
  const double half = 0.5 * (t2 - t1);
  if (!(std::abs(half) > 0.0)) return std::nullopt;
  Vector p(4);
  p << 0.5 * (t1 + t2) - (2.0 * w0 - 1.0) * half, (2.0 * w0 - 1.0) * half, half, s0;
  auto unpack = [](const Vector& q, double& a, double& b, double& w) {
    a = q[0] + q[1] - q[2];
    b = q[0] + q[1] + q[2];
    w = 0.5 * (1.0 + q[1] / q[2]);
  };
  auto res = [&](const Vector& q) -> Vector {
    double a, b, w;
    unpack(q, a, b, w);
    return w * sm4(a) + (1.0 - w) * sm4(b) - q[3] * x;
  };
  auto jac = [&](const Vector& q) -> Matrix {
    double a, b, w;
    unpack(q, a, b, w);
    const Vector slope = w * sm4_prime(a) + (1.0 - w) * sm4_prime(b);
    const Vector chord = sm4(a) - sm4(b);
    Matrix j(4, 4);
    j.col(0) = slope;
    j.col(1) = slope + chord / (2.0 * q[2]);
    j.col(2) = (1.0 - w) * sm4_prime(b) - w * sm4_prime(a) - chord * q[1] / (2.0 * q[2] * q[2]);
    j.col(3) = -x;
    return j;
  };
  if (!gauss_newton(p, res, jac)) return std::nullopt;
  double a, b, w;
  unpack(p, a, b, w);
  Edge e{canonical_angle(a), canonical_angle(b), w};
  if (canonical_angle(e.t2 - e.t1) > kPi) e = {e.t2, e.t1, 1.0 - e.weight};
  const double d = circle::geodesic_dist(CirclePoint(e.t1), CirclePoint(e.t2));
  if (!(e.weight > kMinFaceWeight && e.weight < 1.0 - kMinFaceWeight) || d < circle::kAngleEps || d > kEdgeArc + kArcSlack)
    return std::nullopt;
  return Fit{e, p[3]};
}

// Starting point for an edge much shorter than the grid step. Near sm(m) the
// first and third harmonic pairs shrink by (1 - q) and (1 - 9q), q ~ d^2 / 2.
std::optional<Fit> fit_short_edge(const Vector& x) {
  const double r1 = std::hypot(x[0], x[1]);
  const double r3 = std::hypot(x[2], x[3]);
  if (!(r1 > 0.0)) return std::nullopt;
  const double ratio = r3 / r1;
  const double q = (1.0 - ratio) / (9.0 - ratio);
  if (!(q > 0.0)) return std::nullopt;
  const double m = std::atan2(x[1], x[0]);
  const double half = std::sqrt(2.0 * q);
  return fit_edge(x, m - half, m + half, 0.5, (1.0 - q) / r1);
}

std::optional<Fit> fit_triangle(const Vector& x, double t0, double w1, double w2, double s0) {
  Vector p(4);
  p << t0, w1, w2, s0;
  auto res = [&](const Vector& q) -> Vector {
    return q[1] * sm4(q[0]) + q[2] * sm4(q[0] + kThird) + (1.0 - q[1] - q[2]) * sm4(q[0] + 2.0 * kThird) -
           q[3] * x;
  };
  auto jac = [&](const Vector& q) -> Matrix {
    const double w3 = 1.0 - q[1] - q[2];
    Matrix j(4, 4);
    j.col(0) = q[1] * sm4_prime(q[0]) + q[2] * sm4_prime(q[0] + kThird) + w3 * sm4_prime(q[0] + 2.0 * kThird);
    j.col(1) = sm4(q[0]) - sm4(q[0] + 2.0 * kThird);
    j.col(2) = sm4(q[0] + kThird) - sm4(q[0] + 2.0 * kThird);
    j.col(3) = -x;
    return j;
  };
  if (!gauss_newton(p, res, jac)) return std::nullopt;
  double w[3] = {p[1], p[2], 1.0 - p[1] - p[2]};
  if (std::min({w[0], w[1], w[2]}) < kMinFaceWeight) return std::nullopt;
  const double t = canonical_angle(p[0]);
  const int shift = std::clamp(static_cast<int>(std::floor(t / kThird)), 0, 2);
  Triangle tri;
  tri.t = std::max(0.0, t - shift * kThird);
  double rotated[3];
  for (int i = 0; i < 3; ++i) rotated[(i + shift) % 3] = w[i];
  tri.w1 = rotated[0];
  tri.w2 = rotated[1];
  tri.w3 = rotated[2];
  return Fit{tri, p[3]};
}

// Initial weights for a triangle with base angle t from the clusters nearest
// to each of its corners.
void triangle_guess(const std::vector<Cluster>& cs, double t, double& w1, double& w2) {
  double w[3] = {0.0, 0.0, 0.0};
  for (const auto& c : cs) {
    const double off = canonical_angle(c.mean - t + kThird / 2.0);
    w[std::clamp(static_cast<int>(off / kThird), 0, 2)] += c.weight;
  }
  const double total = w[0] + w[1] + w[2];
  if (std::min({w[0], w[1], w[2]}) <= 0.0 || total <= 0.0) {
    w1 = w2 = 1.0 / 3.0;
    return;
  }
  w1 = w[0] / total;
  w2 = w[1] / total;
}

std::optional<Fit> refine(const Vector& x, const GaugeResult& lp, double h) {
  const auto cs = cluster_support(lp.support, kClusterSteps * h + 1e-12);
  if (cs.empty()) return std::nullopt;
  const double s0 = lp.scale;

  std::vector<std::function<std::optional<Fit>()>> tries;
  const Cluster& c0 = cs[0];
  const Cluster& c1 = cs.size() > 1 ? cs[1] : cs[0];
  if (cs.size() == 1) {
    tries.push_back([&] { return fit_vertex(x, c0.mean, s0); });
    tries.push_back([&] { return fit_short_edge(x); });
    if (c0.hi > c0.lo) tries.push_back([&] { return fit_edge(x, c0.lo, c0.hi, 0.5, s0); });
  } else {
    auto edge_from_two = [&] {
      const double w = c0.weight / (c0.weight + c1.weight);
      return fit_edge(x, c0.mean, c1.mean, w, s0);
    };
    auto triangle_from_heaviest = [&] {
      double w1 = 0.0, w2 = 0.0;
      triangle_guess(cs, c0.mean, w1, w2);
      return fit_triangle(x, c0.mean, w1, w2, s0);
    };
    if (cs.size() == 2) {
      tries.push_back(edge_from_two);
      tries.push_back(triangle_from_heaviest);
    } else {
      tries.push_back(triangle_from_heaviest);
      tries.push_back(edge_from_two);
    }
    tries.push_back([&] { return fit_vertex(x, c0.mean, s0); });
    tries.push_back([&] { return fit_short_edge(x); });
    if (c0.hi > c0.lo) tries.push_back([&] { return fit_edge(x, c0.lo, c0.hi, 0.5, s0); });
  }

  for (const auto& attempt : tries) {
    auto fit = attempt();
    if (!fit) continue;
    // The grid hull sits inside B_4, so the exact gauge is at least the LP
    // value and exceeds it only by the chord error.
    if (fit->scale < s0 - 1e-9 * std::max(1.0, s0)) continue;
    if (fit->scale > s0 * (1.0 + 1e-3) + 1e-12) continue;
    return fit;
  }
  return std::nullopt;
}

}  // namespace

GaugeResult gauge(const Vector& x, int grid) {
  if (x.size() < 2 || x.size() % 2 != 0)
    throw Error("dimension-mismatch", "gauge needs a vector of even dimension");
  if (x.norm() < 1e-9) throw Error("zero-vector", "gauge of the zero vector is undefined");
  if (grid < 90) throw Error("grid-too-coarse", "gauge grid must be >= 90");

  if (x.size() == 2) {
    GaugeResult out;
    out.scale = 1.0 / x.norm();
    out.support.push_back({CirclePoint(std::atan2(x[1], x[0])), 1.0});
    out.refined = true;
    return out;
  }
  GaugeResult lp = gauge_lp(x, grid);
  if (x.size() != 4) return lp;

  for (int g : {grid, 2 * grid}) {
    if (g != grid) {
      log::debug("gauge: refinement failed at grid " + std::to_string(grid) + ", retrying at " +
                 std::to_string(g));
      lp = gauge_lp(x, g);
    }
    if (auto fit = refine(x, lp, kTwoPi / g)) {
      GaugeResult out;
      out.scale = fit->scale;
      out.support = face_atoms(fit->face);
      out.refined = true;
      out.face = fit->face;
      return out;
    }
  }
  log::warn("gauge: no face hypothesis fits; returning the unpolished LP answer");
  return lp;
}

BoundaryPointB4 radial_project(const Vector& x, int grid) {
  if (x.size() != 4) throw Error("dimension-mismatch", "radial projection onto B_4 needs a vector in R^4");
  const GaugeResult g = gauge(x, grid);
  if (!g.refined || !g.face) throw Error("refinement-failed", "no face of B_4 fits the gauge LP support");
  return {*g.face, g.scale * x};
}

thickening::DiscreteMeasure iota(const BoundaryPointB4& b) {
  validate_face(b.face);
  std::vector<CirclePoint> pts;
  std::vector<double> ws;
  for (const auto& a : face_atoms(b.face)) {
    pts.push_back(a.point);
    ws.push_back(a.weight);
  }
  return thickening::DiscreteMeasure::make(pts, ws);
}

FaceType classify_face(const Configuration& angles) {
  if (angles.empty()) throw Error("empty-configuration", "no angles given");
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i + 1; j < angles.size(); ++j)
      if (circle::geodesic_dist(angles[i], angles[j]) < circle::kAngleEps)
        throw Error("degenerate-configuration", "repeated angle");
  switch (angles.size()) {
    case 1: return FaceType::kVertex;
    case 2:
      return circle::geodesic_dist(angles[0], angles[1]) <= kEdgeArc + circle::kAngleEps ? FaceType::kEdge
                                                                                           : FaceType::kNotAFace;
    case 3: {
      const Configuration s = circle::sort_ccw(angles.points());
      for (std::size_t i = 0; i < 3; ++i) {
        const double gap = canonical_angle(s[(i + 1) % 3].angle() - s[i].angle());
        if (std::abs(gap - kThird) > circle::kAngleEps) return FaceType::kNotAFace;
      }
      return FaceType::kTriangle;
    }
    default: return FaceType::kNotAFace;
  }
}

double edge_arc_bound(int k) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  return kTwoPi * (k - 1) / (2.0 * k - 1.0);
}

bool edge_predicate_b2k(int k, CirclePoint t0, CirclePoint t1) {
  const double bound = edge_arc_bound(k);
  const double d = circle::geodesic_dist(t0, t1);
  if (d < circle::kAngleEps) throw Error("equal-points", "edge endpoints coincide");
  return d <= bound + circle::kAngleEps;
}

}  // namespace orbitope_kit::orbitope
