#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "orbitope_kit/caratheodory.hpp"
#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/error.hpp"
#include "orbitope_kit/json_io.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/raked_poly.hpp"
#include "orbitope_kit/thickening.hpp"

namespace py = pybind11;
using namespace orbitope_kit;
using json_io::Json;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_py(it.value());
      return d;
    }
    case Json::value_t::array: {
      py::list l;
      for (const auto& e : j) l.append(to_py(e));
      return l;
    }
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    default: return py::none();
  }
}

circle::Configuration config(const std::vector<double>& angles) { return circle::Configuration::from_angles(angles); }

std::vector<Eigen::VectorXd> rows(const Eigen::MatrixXd& m) {
  std::vector<Eigen::VectorXd> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(m.row(i).transpose());
  return out;
}

thickening::DiscreteMeasure measure(const std::vector<std::pair<double, double>>& atoms) {
  std::vector<circle::CirclePoint> pts;
  std::vector<double> ws;
  for (const auto& [t, w] : atoms) {
    pts.emplace_back(t);
    ws.push_back(w);
  }
  return thickening::DiscreteMeasure::make(pts, ws);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Moment curves, orbitope B_4 and metric thickenings of the circle";

  py::register_exception<Error>(m, "OrbitopeError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("sm", [](int k, double t) { return moment::sm(k, t); }, py::arg("k"), py::arg("t"));
  m.def("geodesic_dist", [](double a, double b) { return circle::geodesic_dist(circle::CirclePoint(a), circle::CirclePoint(b)); });
  m.def("diameter", [](const std::vector<double>& x) { return circle::diameter(config(x)); });
  m.def("chi_counts", [](const std::vector<double>& x) { return circle::chi_counts(config(x)); });
  m.def("sine_product", [](const std::vector<double>& x) { return moment::sine_product(config(x)); });
  m.def("det_direct", [](const std::vector<double>& x, int k) { return moment::det_direct(config(x), k); });
  m.def("nullspace_lambda",
        [](const std::vector<double>& x, int k) { return to_py(json_io::to_json(moment::nullspace_lambda(config(x), k))); });
  m.def("same_sign_condition", [](const std::vector<double>& x, int k) { return moment::same_sign_condition(config(x), k); });

  m.def("origin_in_conv",
        [](const Eigen::MatrixXd& vectors) { return to_py(json_io::to_json(caratheodory::origin_in_conv(rows(vectors)))); },
        py::arg("vectors"), "Rows of `vectors` are the points.");
  m.def("miss_origin_bound", &caratheodory::miss_origin_bound);
  m.def("verify_miss_origin", [](int k, const std::vector<double>& x) {
    return to_py(json_io::to_json(caratheodory::verify_miss_origin(k, config(x))));
  });
  m.def(
      "bu_circle_search",
      [](const Eigen::MatrixXd& values, double bound) -> py::object {
        const int grid = static_cast<int>(values.rows());
        caratheodory::CircleMapTable table;
        for (int i = 0; i < grid; ++i) table.push_back({circle::kTwoPi * i / grid, values.row(i).transpose()});
        const auto w = caratheodory::bu_circle_search(table, bound, grid);
        if (!w) return py::none();
        return to_py(json_io::to_json(*w));
      },
      py::arg("values"), py::arg("bound"), "Row i of `values` is f(2 pi i / grid).");
  m.def("simplex_diameter", &caratheodory::simplex_diameter);
  m.def("regular_simplex", &caratheodory::regular_simplex);

  m.def("from_roots", [](const std::vector<double>& roots) {
    std::vector<circle::CirclePoint> pts(roots.begin(), roots.end());
    return to_py(json_io::to_json(raked::from_roots(pts)));
  });
  m.def("eval_poly", [](std::vector<double> a, std::vector<double> b, double t) {
    return raked::eval(raked::RakedPolynomial::make(std::move(a), std::move(b)), t);
  });
  m.def("sign_pattern", [](std::vector<double> a, std::vector<double> b, int grid) {
    std::vector<std::tuple<double, double, int>> out;
    for (const auto& s : raked::sign_pattern(raked::RakedPolynomial::make(std::move(a), std::move(b)), grid))
      out.emplace_back(s.arc.a().angle(), s.arc.b().angle(), s.sign);
    return out;
  });

  m.def("gauge", [](const Eigen::VectorXd& x, int grid) { return to_py(json_io::to_json(orbitope::gauge(x, grid))); },
        py::arg("x"), py::arg("grid") = orbitope::kDefaultGrid);
  m.def(
      "radial_project",
      [](const Eigen::VectorXd& x, int grid) { return to_py(json_io::to_json(orbitope::radial_project(x, grid))); },
      py::arg("x"), py::arg("grid") = orbitope::kDefaultGrid);
  m.def("classify_face", [](const std::vector<double>& x) { return std::string(orbitope::to_string(orbitope::classify_face(config(x)))); });
  m.def("edge_predicate_b2k", [](int k, double a, double b) {
    return orbitope::edge_predicate_b2k(k, circle::CirclePoint(a), circle::CirclePoint(b));
  });

  m.def("wasserstein1", [](const std::vector<std::pair<double, double>>& mu, const std::vector<std::pair<double, double>>& nu) {
    const auto plan = thickening::wasserstein1(measure(mu), measure(nu));
    return py::make_tuple(plan.cost, to_py(json_io::to_json(plan)));
  });
  m.def("pushforward_sm",
        [](int k, const std::vector<std::pair<double, double>>& mu) { return thickening::pushforward_sm(k, measure(mu)); });
  m.def(
      "homotopy_probe",
      [](int k, double r, int trials, std::uint64_t seed) {
        return to_py(json_io::to_json(thickening::homotopy_probe(k, r, trials, seed)));
      },
      py::arg("k"), py::arg("r"), py::arg("trials"), py::arg("seed") = 0);
}
