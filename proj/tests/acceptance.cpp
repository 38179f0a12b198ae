// Runs the ten acceptance checks and prints one PASS/FAIL line for each.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbitope_kit/caratheodory.hpp"
#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/error.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/raked_poly.hpp"
#include "orbitope_kit/random.hpp"
#include "orbitope_kit/thickening.hpp"
#include "samplers.hpp"

using namespace orbitope_kit;
using circle::CirclePoint;
using circle::Configuration;
using oracle::kPi;
using oracle::kTwoPi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Configuration config(const std::vector<double>& t) { return Configuration::from_angles(t); }

std::vector<Eigen::VectorXd> curve_vectors(int k, const std::vector<double>& t) {
  std::vector<Eigen::VectorXd> v;
  for (double x : t) v.push_back(moment::sm(k, x));
  return v;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome determinant_ratio() {
  std::mt19937_64 g(101);
  Outcome o;
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const double expected = std::ldexp(1.0, 2 * k * (k - 1));
    double first = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = config(oracle::generic_angles(g, 2 * k, 0.05));
      const double ratio = moment::det_direct(x, k) / moment::sine_product(x);
      if (trial == 0) first = ratio;
      const double rel = std::max(std::abs(ratio - first) / std::abs(first),
                                  std::abs(std::abs(ratio) - expected) / expected);
      worst = std::max(worst, rel);
    }
  }
  o.pass = worst <= 1e-8;
  o.detail = fmt("max relative deviation %.3g over k=1..4", worst);
  return o;
}

Outcome nullspace() {
  std::mt19937_64 g(202);
  Outcome o;
  double worst = 0.0;
  int bad_nullity = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = config(oracle::generic_angles(g, 2 * k + 1, 0.05));
      const auto m = moment::moment_matrix(k, x);
      const auto n = moment::nullspace_lambda(x, k);
      const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(n.lambda.data(), 2 * k + 1);
      worst = std::max(worst, (m.columns * lambda).lpNorm<Eigen::Infinity>() / lambda.lpNorm<Eigen::Infinity>());
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m.columns).singularValues();
      int rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9 * sv(0)) ++rank;
      if (2 * k + 1 - rank != 1) ++bad_nullity;
    }
  }
  o.pass = worst <= 1e-9 && bad_nullity == 0;
  o.detail = fmt("max |M lambda|/|lambda| %.3g, nullity failures %d", worst, bad_nullity);
  return o;
}

Outcome sign_law() {
  std::mt19937_64 g(303);
  int sign_errors = 0, lp_errors = 0, feasible_seen = 0, total = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + trial % 3;
    const auto t = oracle::generic_angles(g, 2 * k + 1, 0.02);
    const auto x = config(t);
    const auto n = moment::nullspace_lambda(x, k);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const int expected = oracle::chi(t, i) % 2 == 0 ? 1 : -1;
      if ((n.alpha[i] > 0 ? 1 : -1) != expected) ++sign_errors;
    }
    const bool same = moment::same_sign_condition(x, k);
    const auto vs = curve_vectors(k, t);
    const auto cert = caratheodory::origin_in_conv(vs);
    if (!caratheodory::validate(cert, vs) || same != caratheodory::is_feasible(cert)) ++lp_errors;
    feasible_seen += same;
    ++total;
  }
  Outcome o;
  o.pass = sign_errors == 0 && lp_errors == 0;
  o.detail = fmt("%d configurations (%d sign-uniform): sign exceptions %d, LP disagreements %d", total,
                 feasible_seen, sign_errors, lp_errors);
  return o;
}

Outcome sharp_bound() {
  Outcome o;
  const double bound = 4.0 * kPi / 5.0;
  std::mt19937_64 g(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int not_separating = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 8;
    const double start = kTwoPi * u(g);
    const double spread = (bound - 0.01) * u(g);
    std::vector<double> t;
    for (int i = 0; i < n; ++i) t.push_back(start + spread * u(g));
    const auto vs = curve_vectors(2, t);
    const auto cert = caratheodory::origin_in_conv(vs);
    if (caratheodory::is_feasible(cert) || !caratheodory::validate(cert, vs)) ++not_separating;
  }

  const auto pentagon = circle::regular_polygon(5);
  std::vector<Eigen::VectorXd> pv;
  for (const auto& p : pentagon.points()) pv.push_back(moment::sm(2, p));
  const auto cert = caratheodory::origin_in_conv(pv);
  double weight_err = INFINITY;
  if (const auto* f = std::get_if<caratheodory::Feasible>(&cert)) {
    weight_err = 0.0;
    for (double w : f->weights) weight_err = std::max(weight_err, std::abs(w - 0.2));
  }

  const int grid = 720;
  const auto table = caratheodory::sample_circle_map([](double t) { return moment::sm(2, t); }, grid);
  const auto start = std::chrono::steady_clock::now();
  const auto witness = caratheodory::bu_circle_search(table, bound - 0.02, grid);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  o.pass = not_separating == 0 && weight_err <= 1e-8 && !witness;
  o.detail = fmt("(a) non-separating %d/1000 (b) pentagon weight error %.3g (c) grid-720 window %s [%.1fs]",
                 not_separating, weight_err, witness ? "FOUND" : "none", secs);
  return o;
}

Outcome borsuk_ulam_witness() {
  Outcome o;
  const int grid = 360;
  const double h = kTwoPi / grid;
  const auto table = caratheodory::sample_circle_map(
      [](double t) {
        Eigen::VectorXd v(3);
        v << std::cos(t), std::sin(t), std::cos(3.0 * t);
        return v;
      },
      grid);
  const auto w = caratheodory::bu_circle_search(table, kTwoPi / 3.0 + 1e-6, grid);
  if (!w) {
    o.pass = false;
    o.detail = "no witness";
    return o;
  }
  const auto t = w->points.angles();
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      worst = std::max(worst, std::abs(oracle::lift_distance(t[i], t[j]) - kTwoPi / 3.0));
  o.pass = t.size() == 3 && worst <= h + 1e-12;
  o.detail = fmt("%zu points, max |gap - 2pi/3| %.3g (grid step %.3g)", t.size(), worst, h);
  return o;
}

Outcome raked_polynomials() {
  Outcome o;
  const std::vector<CirclePoint> tri{CirclePoint(0.0), CirclePoint(kTwoPi / 3.0), CirclePoint(2.0 * kTwoPi / 3.0)};
  const auto p = raked::from_roots(tri);
  const double coef_err =
      std::max({std::abs(p.a[0]), std::abs(p.a[1]), std::abs(p.b[0]), std::abs(p.b[1] - 0.25)});

  std::mt19937_64 g(606);
  double worst_zero = 0.0;
  int alternation_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 2;
    const auto v = oracle::generic_angles(g, 2 * k - 1, 0.02);
    std::vector<CirclePoint> roots(v.begin(), v.end());
    const auto q = raked::from_roots(roots);
    std::vector<double> zeros;
    for (double r : v) {
      zeros.push_back(circle::canonical_angle(r));
      zeros.push_back(circle::canonical_angle(r + kPi));
    }
    for (double z : zeros) worst_zero = std::max(worst_zero, std::abs(raked::eval(q, z)));

    // Signs between consecutive prescribed zeros must alternate, and the
    // library's sign pattern must have exactly 4k-2 arcs.
    std::sort(zeros.begin(), zeros.end());
    int prev = 0;
    bool ok = true;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const double hi = i + 1 < zeros.size() ? zeros[i + 1] : zeros[0] + kTwoPi;
      const double mid = 0.5 * (zeros[i] + hi);
      double direct = 1.0;
      for (double r : v) direct *= std::sin(r - mid);
      const int s = direct > 0 ? 1 : -1;
      if ((raked::eval(q, mid) > 0 ? 1 : -1) != s) ok = false;
      if (i > 0 && s == prev) ok = false;
      prev = s;
    }
    const auto pattern = raked::sign_pattern(q, 4096);
    if (pattern.size() != zeros.size()) ok = false;
    for (std::size_t i = 0; ok && i < pattern.size(); ++i)
      if (pattern[i].sign == pattern[(i + 1) % pattern.size()].sign) ok = false;
    if (!ok) ++alternation_failures;
  }

  Rng rng(607);
  double worst_min = -INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<double> a(k), b(k);
    for (int j = 0; j < k; ++j) {
      a[j] = rng.normal();
      b[j] = rng.normal();
    }
    const auto poly = raked::RakedPolynomial::make(a, b);
    const auto gon = circle::regular_polygon(2 * k + 1, rng.uniform(0.0, kTwoPi));
    worst_min = std::max(worst_min, raked::min_on_set(poly, gon).value);
  }

  o.pass = coef_err <= 1e-9 && worst_zero <= 1e-9 && alternation_failures == 0 && worst_min <= 1e-12;
  o.detail = fmt("coefficient error %.3g, max |p(zero)| %.3g, alternation failures %d, max min-on-gon %.3g",
                 coef_err, worst_zero, alternation_failures, worst_min);
  return o;
}

Outcome orbitope_round_trip() {
  Outcome o;
  Rng rng(707);
  int type_failures = 0, errors = 0;
  double worst_param = 0.0, worst_homog = 0.0;
  for (auto type : {orbitope::FaceType::kVertex, orbitope::FaceType::kEdge, orbitope::FaceType::kTriangle}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto face = samplers::random_face(rng, type);
      const auto b = orbitope::make_boundary_point(face);
      const double c = rng.uniform(0.3, 3.0);
      try {
        const auto back = orbitope::radial_project(c * b.coordinates);
        if (back.face.index() != face.index()) {
          ++type_failures;
          continue;
        }
        worst_param = std::max(worst_param, samplers::face_distance(face, back.face));
        const double s1 = orbitope::gauge(b.coordinates).scale;
        const double sc = orbitope::gauge(c * b.coordinates).scale;
        worst_homog = std::max(worst_homog, std::abs(sc * c - s1) / s1);
      } catch (const std::exception&) {
        ++errors;
      }
    }
  }
  o.pass = type_failures == 0 && errors == 0 && worst_param <= 1e-6 && worst_homog <= 1e-6;
  o.detail = fmt("3000 points: type failures %d, errors %d, max parameter error %.3g, max homogeneity error %.3g",
                 type_failures, errors, worst_param, worst_homog);
  return o;
}

Outcome wasserstein_metric() {
  Outcome o;
  Rng rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = thickening::random_measure(rng, kPi);
    const auto b = thickening::random_measure(rng, kPi);
    const auto c = thickening::random_measure(rng, kPi);
    const double ab = thickening::wasserstein1(a, b).cost;
    const double ba = thickening::wasserstein1(b, a).cost;
    const double bc = thickening::wasserstein1(b, c).cost;
    const double ac = thickening::wasserstein1(a, c).cost;
    const double aa = thickening::wasserstein1(a, a).cost;
    worst = std::max({worst, std::abs(aa), std::abs(ab - ba), ac - (ab + bc), -ab});
  }
  const double antipodal =
      thickening::wasserstein1(thickening::DiscreteMeasure::dirac(CirclePoint(0.0)),
                               thickening::DiscreteMeasure::dirac(CirclePoint(kPi)))
          .cost;
  const auto two = thickening::DiscreteMeasure::make({CirclePoint(0.0), CirclePoint(kPi / 2.0)}, {0.5, 0.5});
  const double worked = thickening::wasserstein1(two, thickening::DiscreteMeasure::dirac(CirclePoint(kPi / 4.0))).cost;
  o.pass = worst <= 1e-9 && antipodal == kPi && std::abs(worked - kPi / 4.0) <= 1e-12;
  o.detail = fmt("max axiom violation %.3g, W1(d0, dpi) - pi = %.3g, worked example error %.3g", worst,
                 antipodal - kPi, std::abs(worked - kPi / 4.0));
  return o;
}

Outcome diameter_non_increase() {
  Outcome o;
  const auto report = thickening::homotopy_probe(2, thickening::kHomotopyScale, 1000, 909);
  Rng rng(910);
  int failures = 0;
  double worst_diam = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = thickening::random_measure(rng, thickening::kHomotopyScale);
    for (int i = 0; i <= 10; ++i) {
      try {
        const auto step = thickening::homotopy_step(mu, i / 10.0);
        worst_diam = std::max(worst_diam, step.support_diameter());
        if (step.support_diameter() > thickening::kHomotopyScale + 1e-8) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  o.pass = report.max_excess <= 1e-8 && failures == 0;
  o.detail = fmt("max union excess %.3g over %d measures; homotopy failures %d, max step diameter %.6f", report.max_excess,
                 report.trials, failures, worst_diam);
  return o;
}

Outcome sphere_search() {
  Outcome o;
  const double r2 = caratheodory::simplex_diameter(2);
  auto inclusion = [](const Eigen::VectorXd& x) { return x; };
  const auto table = caratheodory::sample_sphere_map(2, 500, 1010, inclusion);
  const auto start = std::chrono::steady_clock::now();
  const auto result = caratheodory::bu_sphere_search(table, r2 - 0.01, 10000, 1011);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto tet = caratheodory::regular_simplex(2);
  const auto cert = caratheodory::origin_in_conv(tet);
  double weight_err = INFINITY;
  if (const auto* f = std::get_if<caratheodory::Feasible>(&cert)) {
    weight_err = 0.0;
    for (double w : f->weights) weight_err = std::max(weight_err, std::abs(w - 0.25));
  }

  // Independent tetrahedron: alternate cube corners.
  const double corners[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  double brute = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double dot = 0.0;
      for (int c = 0; c < 3; ++c) dot += corners[i][c] * corners[j][c] / 3.0;
      brute = std::max(brute, std::acos(dot));
    }
  double lib_tet = 0.0;
  for (std::size_t i = 0; i < tet.size(); ++i)
    for (std::size_t j = i + 1; j < tet.size(); ++j) lib_tet = std::max(lib_tet, caratheodory::sphere_dist(tet[i], tet[j]));
  const double r_err = std::max({std::abs(r2 - std::acos(-1.0 / 3.0)), std::abs(r2 - brute), std::abs(r2 - lib_tet)});

  o.pass = !result.witness && result.trials_run == 10000 && weight_err <= 1e-8 && r_err <= 1e-10;
  o.detail = fmt("below r_2: %s after %d trials [%.1fs]; tetrahedron weight error %.3g; r_2 error %.3g",
                 result.witness ? "FOUND" : "none-found", result.trials_run, secs, weight_err, r_err);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"determinant closed form", determinant_ratio},
      {"moment matrix nullspace", nullspace},
      {"nullspace sign law", sign_law},
      {"sharp diameter bound", sharp_bound},
      {"circle witness search", borsuk_ulam_witness},
      {"raked polynomials", raked_polynomials},
      {"orbitope round trip", orbitope_round_trip},
      {"wasserstein metric", wasserstein_metric},
      {"diameter non-increase", diameter_non_increase},
      {"sphere search", sphere_search},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
