#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitope_kit/caratheodory.hpp"
#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/error.hpp"
#include "orbitope_kit/json_io.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/random.hpp"
#include "orbitope_kit/raked_poly.hpp"
#include "orbitope_kit/thickening.hpp"

namespace orbitope_kit::cli {

namespace {

using json_io::Json;
using circle::kPi;
using circle::kTwoPi;

constexpr int kPlotSamples = 1024;

struct Settings {
  int k = 2;
  std::optional<double> r;
  int grid = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<double> bound;
  std::string points_file;
  std::string out_file;
  std::string format = "json";

  // verify-miss-origin
  int random_count = 0;
  std::optional<double> max_diam;
  // bu-search, bu-sphere-search
  std::string map = "sm4";
  int dim = 2;
  int samples = 2000;
  bool with_simplex = false;
  // positional arguments
  std::vector<double> values;
  std::vector<std::string> files;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return json_io::parse(read_file(path)); }

void require_json_format(const Settings& s) {
  if (s.format != "json") throw Error("invalid-format", "this command only emits json");
}

void emit(const Settings& s, std::ostream& out, const std::string& text) {
  if (s.out_file.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(s.out_file);
  if (!f) throw Error("io-error", "cannot write '" + s.out_file + "'");
  f << text << '\n';
}

void emit_json(const Settings& s, std::ostream& out, const Json& j) {
  require_json_format(s);
  emit(s, out, json_io::dump(j));
}

int require_k(int k) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  return k;
}

// ---------------------------------------------------------------------------

int cmd_verify_miss_origin(const Settings& s, std::ostream& out) {
  const int k = require_k(s.k);
  const bool from_file = !s.points_file.empty();
  if (from_file == (s.random_count > 0))
    throw Error("usage", "give exactly one of --points FILE or --random N");
  circle::Configuration x;
  if (from_file) {
    x = json_io::configuration_from_json(read_json(s.points_file));
  } else {
    const double spread = s.max_diam.value_or(caratheodory::miss_origin_bound(k) - 0.01);
    if (!(spread > 0.0 && spread <= kPi)) throw Error("invalid-scale", "--max-diam must lie in (0, pi]");
    Rng rng(s.seed);
    const double start = rng.uniform(0.0, kTwoPi);
    std::vector<circle::CirclePoint> pts;
    for (int i = 0; i < s.random_count; ++i) pts.emplace_back(start + rng.uniform(0.0, spread));
    x = circle::Configuration(std::move(pts));
  }
  const auto report = caratheodory::verify_miss_origin(k, x);
  Json j = json_io::to_json(report);
  j["points"] = json_io::to_json(x);
  emit_json(s, out, j);
  return report.consistent ? 0 : 1;
}

int cmd_poly_from_roots(const Settings& s, std::ostream& out) {
  if (s.format != "json" && s.format != "csv") throw Error("invalid-format", "--format must be json or csv");
  std::vector<circle::CirclePoint> roots;
  for (double v : s.values) roots.emplace_back(v);
  const auto p = raked::from_roots(roots);

  std::ostringstream csv;
  csv << "t,p\n";
  for (int i = 0; i < kPlotSamples; ++i) {
    const double t = kTwoPi * i / kPlotSamples;
    char line[64];
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", t, raked::eval(p, t));
    csv << line;
  }
  if (s.format == "csv") {
    emit(s, out, csv.str());
    return 0;
  }
  out << json_io::dump(json_io::to_json(p)) << '\n';
  if (!s.out_file.empty()) {
    std::ofstream f(s.out_file);
    if (!f) throw Error("io-error", "cannot write '" + s.out_file + "'");
    f << csv.str();
  }
  return 0;
}

int cmd_bu_search(const Settings& s, std::ostream& out) {
  const int grid = s.grid > 0 ? s.grid : 360;
  std::function<Eigen::VectorXd(double)> f;
  std::optional<int> k;
  if (s.map == "fig1") {
    f = [](double t) {
      Eigen::VectorXd v(3);
      v << std::cos(t), std::sin(t), std::cos(3.0 * t);
      return v;
    };
  } else if (s.map.size() > 2 && s.map.rfind("sm", 0) == 0) {
    int dim = 0;
    try {
      dim = std::stoi(s.map.substr(2));
    } catch (const std::exception&) {
      throw Error("usage", "unknown map '" + s.map + "'");
    }
    if (dim < 2 || dim % 2 != 0) throw Error("usage", "smN needs an even N >= 2");
    k = dim / 2;
    f = [kk = *k](double t) { return moment::sm(kk, t); };
  } else {
    throw Error("usage", "unknown map '" + s.map + "' (expected smN or fig1)");
  }
  const double bound = s.bound.value_or(k ? caratheodory::miss_origin_bound(*k) : kTwoPi / 3.0);
  if (!(bound >= 0.0)) throw Error("invalid-scale", "--bound must be nonnegative");

  const auto table = caratheodory::sample_circle_map(f, grid);
  const auto witness = caratheodory::bu_circle_search(table, bound, grid);
  Json j = {{"map", s.map}, {"grid", grid}, {"bound", bound}, {"found", witness.has_value()}};
  bool consistent = true;
  if (witness) {
    j["witness"] = json_io::to_json(*witness);
    if (k) consistent = witness->diameter >= caratheodory::miss_origin_bound(*k) - circle::kAngleEps;
  }
  j["consistent"] = consistent;
  emit_json(s, out, j);
  return consistent ? 0 : 1;
}

int cmd_bu_sphere_search(const Settings& s, std::ostream& out) {
  const int n = s.dim;
  if (n < 2) throw Error("invalid-dimension", "--dim must be >= 2");
  if (s.samples < 2) throw Error("usage", "--samples must be >= 2");
  const int trials = s.trials > 0 ? s.trials : 10000;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> f;
  if (s.map == "inclusion") {
    f = [](const Eigen::VectorXd& x) { return x; };
  } else if (s.map == "pad") {
    f = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(x.size() + 1);
      v.head(x.size()) = x;
      return v;
    };
  } else {
    throw Error("usage", "unknown sphere map '" + s.map + "' (expected inclusion or pad)");
  }
  const double rn = caratheodory::simplex_diameter(n);
  const double bound = s.bound.value_or(rn);
  std::vector<Eigen::VectorXd> extra;
  if (s.with_simplex) extra = caratheodory::regular_simplex(n);
  const auto table = caratheodory::sample_sphere_map(n, s.samples, s.seed, f, extra);
  const auto result = caratheodory::bu_sphere_search(table, bound, trials, s.seed);

  Json j = {{"map", s.map},
            {"dim", n},
            {"bound", bound},
            {"r_n", rn},
            {"seed", s.seed},
            {"found", result.witness.has_value()},
            {"trials_run", result.trials_run}};
  if (result.witness) j["witness"] = json_io::to_json(*result.witness);
  else j["best_margin"] = result.best_margin;
  // Below r_n no witness can exist for these maps.
  const bool consistent = !result.witness || result.witness->diameter >= rn - 1e-9;
  j["consistent"] = consistent;
  emit_json(s, out, j);
  return consistent ? 0 : 1;
}

int cmd_project(const Settings& s, std::ostream& out) {
  const int grid = s.grid > 0 ? s.grid : orbitope::kDefaultGrid;
  if (s.values.size() != 4) throw Error("dimension-mismatch", "project needs 4 coordinates");
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(s.values.data(), 4);
  const auto g = orbitope::gauge(x, grid);
  if (!g.refined || !g.face) throw Error("refinement-failed", "no face of B_4 fits the gauge LP support");
  Json j = json_io::to_json(orbitope::BoundaryPointB4{*g.face, g.scale * x});
  j["scale"] = g.scale;
  emit_json(s, out, j);
  return 0;
}

int cmd_iota(const Settings& s, std::ostream& out) {
  orbitope::BoundaryPointB4 b;
  if (!s.points_file.empty()) {
    b = json_io::boundary_point_from_json(read_json(s.points_file));
  } else if (s.values.size() == 4) {
    b = orbitope::radial_project(Eigen::Map<const Eigen::VectorXd>(s.values.data(), 4),
                                 s.grid > 0 ? s.grid : orbitope::kDefaultGrid);
  } else {
    throw Error("usage", "iota needs --points FILE (boundary point JSON) or 4 coordinates");
  }
  emit_json(s, out, json_io::to_json(orbitope::iota(b)));
  return 0;
}

int cmd_wasserstein(const Settings& s, std::ostream& out) {
  if (s.files.size() != 2) throw Error("usage", "wasserstein needs two measure files");
  const auto mu = json_io::measure_from_json(read_json(s.files[0]));
  const auto nu = json_io::measure_from_json(read_json(s.files[1]));
  const auto plan = thickening::wasserstein1(mu, nu);
  emit_json(s, out, {{"distance", plan.cost}, {"plan", json_io::to_json(plan)}});
  return 0;
}

int cmd_probe(const Settings& s, std::ostream& out) {
  const int k = require_k(s.k);
  const double r = s.r.value_or(k == 1 ? 0.5 : orbitope::edge_arc_bound(k));
  const int trials = s.trials > 0 ? s.trials : 1000;
  const auto report = thickening::homotopy_probe(k, r, trials, s.seed, s.grid > 0 ? s.grid : orbitope::kDefaultGrid);
  // Proven cases: k = 1, and k = 2 at r = 2pi/3.
  const bool proven = k == 1 || (k == 2 && std::abs(r - thickening::kHomotopyScale) <= 1e-12);
  const bool consistent = !proven || report.max_excess <= 1e-8;
  Json j = json_io::to_json(report);
  j["proven_case"] = proven;
  j["consistent"] = consistent;
  emit_json(s, out, j);
  return consistent ? 0 : 1;
}

circle::Configuration points_from(const Settings& s) {
  if (!s.points_file.empty()) return json_io::configuration_from_json(read_json(s.points_file));
  if (!s.values.empty()) return circle::Configuration::from_angles(s.values);
  throw Error("usage", "give --points FILE or angles");
}

int cmd_chi(const Settings& s, std::ostream& out) {
  const auto x = points_from(s);
  const auto chi = circle::chi_counts(x);
  int total = 0;
  for (int c : chi) total += c;
  emit_json(s, out, {{"points", json_io::to_json(x)}, {"chi", chi}, {"sum", total}});
  return 0;
}

int cmd_nullspace(const Settings& s, std::ostream& out) {
  const int k = require_k(s.k);
  const auto x = points_from(s);
  const auto n = moment::nullspace_lambda(x, k);
  const auto m = moment::moment_matrix(k, x);
  const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(n.lambda.data(), static_cast<Eigen::Index>(n.lambda.size()));
  const double residual = (m.columns * lambda).lpNorm<Eigen::Infinity>();
  Json j = json_io::to_json(n);
  j["chi"] = circle::chi_counts(x);
  j["same_sign_condition"] = moment::same_sign_condition(x, k);
  j["residual"] = residual;
  if (n.same_sign()) {
    Json w = Json::array();
    for (double v : n.normalized()) w.push_back(v);
    j["weights"] = w;
  }
  emit_json(s, out, j);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment curves, orbitope B_4 and metric thickenings of the circle", "orbitope-kit"};
  app.require_subcommand(1);
  Settings s;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--out", s.out_file, "Write the report to this file");
    c->add_option("--format", s.format, "Output format (json|csv)")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify-miss-origin", "Check conv(SM_2k(X)) against the diameter bound");
  verify->add_option("-k", s.k, "Curve order k")->required();
  verify->add_option("--points", s.points_file, "JSON array of angles");
  verify->add_option("--random", s.random_count, "Draw N random points instead");
  verify->add_option("--seed", s.seed, "Random seed");
  verify->add_option("--max-diam", s.max_diam, "Arc length for random points");
  add_format(verify);

  auto* poly = app.add_subcommand("poly-from-roots", "Raked polynomial prod sin(v_l - t)");
  poly->add_option("roots", s.values, "2k-1 root angles")->required();
  add_format(poly);

  auto* search = app.add_subcommand("bu-search", "Witness search for an odd map of the circle");
  search->add_option("--map", s.map, "smN (N even) or fig1");
  search->add_option("--bound", s.bound, "Diameter bound");
  search->add_option("--grid", s.grid, "Grid size (even)");
  add_format(search);

  auto* sphere = app.add_subcommand("bu-sphere-search", "Randomized witness search on a sampled sphere");
  sphere->add_option("--dim", s.dim, "Sphere dimension n");
  sphere->add_option("--map", s.map, "inclusion (default) or pad");
  sphere->add_option("--bound", s.bound, "Diameter bound (default r_n)");
  sphere->add_option("--samples", s.samples, "Number of sample points");
  sphere->add_option("--trials", s.trials, "Number of search trials");
  sphere->add_option("--seed", s.seed, "Random seed");
  sphere->add_flag("--with-simplex", s.with_simplex, "Add the vertices of a regular simplex");
  add_format(sphere);

  auto* project = app.add_subcommand("project", "Radial projection onto the boundary of B_4");
  project->add_option("coords", s.values, "Four coordinates")->required();
  project->add_option("--grid", s.grid, "Gauge LP grid");
  add_format(project);

  auto* iota = app.add_subcommand("iota", "Measure of a boundary point of B_4");
  iota->add_option("coords", s.values, "Four coordinates (projected first)");
  iota->add_option("--points", s.points_file, "Boundary point JSON");
  iota->add_option("--grid", s.grid, "Gauge LP grid");
  add_format(iota);

  auto* wass = app.add_subcommand("wasserstein", "1-Wasserstein distance of two measures");
  wass->add_option("measures", s.files, "Two JSON measure files")->required()->expected(2);
  add_format(wass);

  auto* probe = app.add_subcommand("probe", "Support-diameter excess of iota p SM_2k on random measures");
  probe->add_option("-k", s.k, "Curve order k");
  probe->add_option("-r", s.r, "Scale r");
  probe->add_option("--trials", s.trials, "Number of random measures");
  probe->add_option("--seed", s.seed, "Random seed");
  probe->add_option("--grid", s.grid, "Gauge LP grid");
  add_format(probe);

  auto* chi = app.add_subcommand("chi", "Chi counts of a configuration");
  chi->add_option("angles", s.values, "Angles");
  chi->add_option("--points", s.points_file, "JSON array of angles");
  add_format(chi);

  auto* null = app.add_subcommand("nullspace", "Closed-form kernel of the moment matrix");
  null->add_option("-k", s.k, "Curve order k")->required();
  null->add_option("angles", s.values, "2k+1 angles");
  null->add_option("--points", s.points_file, "JSON array of angles");
  add_format(null);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify_miss_origin(s, out);
    if (poly->parsed()) return cmd_poly_from_roots(s, out);
    if (search->parsed()) return cmd_bu_search(s, out);
    if (sphere->parsed()) {
      if (sphere->count("--map") == 0) s.map = "inclusion";
      return cmd_bu_sphere_search(s, out);
    }
    if (project->parsed()) return cmd_project(s, out);
    if (iota->parsed()) return cmd_iota(s, out);
    if (wass->parsed()) return cmd_wasserstein(s, out);
    if (probe->parsed()) return cmd_probe(s, out);
    if (chi->parsed()) return cmd_chi(s, out);
    if (null->parsed()) return cmd_nullspace(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace orbitope_kit::cli
