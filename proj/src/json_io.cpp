#include "orbitope_kit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

#include "orbitope_kit/error.hpp"

namespace orbitope_kit::json_io {

namespace {

void write_number(std::ostringstream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << colon;
        write(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write(os, e, indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

[[noreturn]] void parse_fail(const std::string& why) { throw Error("parse-error", why); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(number(e, what));
  return out;
}

Json weights_json(const std::vector<double>& w) {
  Json a = Json::array();
  for (double x : w) a.push_back(x);
  return a;
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json to_json(const circle::Configuration& x) { return weights_json(x.angles()); }

Json to_json(const caratheodory::ConvexCertificate& c) {
  if (const auto* f = std::get_if<caratheodory::Feasible>(&c))
    return {{"type", "feasible"}, {"weights", weights_json(f->weights)}, {"residual", f->residual}};
  const auto& s = std::get<caratheodory::Separating>(c);
  return {{"type", "separating"}, {"z", to_json(s.z)}, {"margin", s.margin}};
}

Json to_json(const caratheodory::MissOriginReport& r) {
  return {{"diameter", r.diameter},
          {"bound", r.bound},
          {"certificate", to_json(r.certificate)},
          {"consistent", r.consistent}};
}

Json to_json(const caratheodory::CircleWitness& w) {
  return {{"points", to_json(w.points)}, {"weights", weights_json(w.weights)}, {"diameter", w.diameter}};
}

Json to_json(const caratheodory::SphereWitness& w) {
  Json pts = Json::array();
  for (const auto& p : w.points) pts.push_back(to_json(p));
  return {{"points", pts}, {"weights", weights_json(w.weights)}, {"diameter", w.diameter}};
}

Json to_json(const moment::NullspaceVector& n) {
  return {{"lambda", weights_json(n.lambda)}, {"alpha", weights_json(n.alpha)}, {"same_sign", n.same_sign()}};
}

Json to_json(const raked::RakedPolynomial& p) {
  return {{"k", p.k}, {"a", weights_json(p.a)}, {"b", weights_json(p.b)}};
}

Json to_json(const orbitope::Face& f) {
  if (const auto* v = std::get_if<orbitope::Vertex>(&f)) return {{"face", "vertex"}, {"t", v->t}};
  if (const auto* e = std::get_if<orbitope::Edge>(&f))
    return {{"face", "edge"}, {"t1", e->t1}, {"t2", e->t2}, {"weight", e->weight}};
  const auto& t = std::get<orbitope::Triangle>(f);
  return {{"face", "triangle"}, {"t", t.t}, {"weights", weights_json({t.w1, t.w2, t.w3})}};
}

Json to_json(const orbitope::BoundaryPointB4& b) {
  Json j = to_json(b.face);
  j["coordinates"] = to_json(b.coordinates);
  return j;
}

Json to_json(const orbitope::GaugeResult& g) {
  Json support = Json::array();
  for (const auto& a : g.support) support.push_back({{"angle", a.point.angle()}, {"weight", a.weight}});
  Json j = {{"scale", g.scale}, {"support", support}, {"refined", g.refined}};
  if (g.face) j["face"] = to_json(*g.face);
  return j;
}

Json to_json(const thickening::DiscreteMeasure& mu) {
  Json a = Json::array();
  for (const auto& atom : mu.atoms()) a.push_back({{"angle", atom.point.angle()}, {"weight", atom.weight}});
  return a;
}

Json to_json(const thickening::TransportPlan& plan) {
  Json entries = Json::array();
  for (const auto& e : plan.entries) entries.push_back({{"source", e.source}, {"target", e.target}, {"mass", e.mass}});
  return {{"cost", plan.cost}, {"entries", entries}};
}

Json to_json(const thickening::ProbeReport& r) {
  return {{"k", r.k},           {"r", r.r},
          {"trials", r.trials}, {"max_excess", r.max_excess},
          {"mean_excess", r.mean_excess}, {"seed", r.seed}};
}

Eigen::VectorXd vector_from_json(const Json& j) {
  const auto v = numbers(j, "vector");
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

circle::Configuration configuration_from_json(const Json& j) {
  const auto v = numbers(j, "configuration");
  return circle::Configuration::from_angles(v);
}

raked::RakedPolynomial polynomial_from_json(const Json& j) {
  auto p = raked::RakedPolynomial::make(numbers(field(j, "a"), "a"), numbers(field(j, "b"), "b"));
  if (j.contains("k") && number(j.at("k"), "k") != p.k) parse_fail("k does not match the coefficient count");
  return p;
}

orbitope::BoundaryPointB4 boundary_point_from_json(const Json& j) {
  const Json& tag = field(j, "face");
  if (!tag.is_string()) parse_fail("face tag must be a string");
  const auto kind = tag.get<std::string>();
  orbitope::Face f;
  if (kind == "vertex") {
    f = orbitope::Vertex{number(field(j, "t"), "t")};
  } else if (kind == "edge") {
    f = orbitope::Edge{number(field(j, "t1"), "t1"), number(field(j, "t2"), "t2"),
                       number(field(j, "weight"), "weight")};
  } else if (kind == "triangle") {
    const auto w = numbers(field(j, "weights"), "weights");
    if (w.size() != 3) parse_fail("triangle needs three weights");
    f = orbitope::Triangle{number(field(j, "t"), "t"), w[0], w[1], w[2]};
  } else {
    parse_fail("unknown face tag '" + kind + "'");
  }
  return orbitope::make_boundary_point(f);
}

thickening::DiscreteMeasure measure_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("measure must be an array of {angle, weight}");
  std::vector<circle::CirclePoint> pts;
  std::vector<double> ws;
  for (const auto& e : j) {
    pts.emplace_back(number(field(e, "angle"), "angle"));
    ws.push_back(number(field(e, "weight"), "weight"));
  }
  return thickening::DiscreteMeasure::make(pts, ws);
}

}  // namespace orbitope_kit::json_io
