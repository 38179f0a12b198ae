#include <doctest.h>

#include "orbitope_kit/error.hpp"
#include "orbitope_kit/json_io.hpp"

using namespace orbitope_kit;
using namespace orbitope_kit::json_io;

namespace {

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("numbers print with 17 significant digits and round-trip") {
  const double third = 1.0 / 3.0;
  const Json j = {{"x", third}, {"n", 3}, {"flag", true}, {"s", "a\"b"}, {"v", Json::array({0.1, 2.0})}};
  const std::string compact = dump(j, 0);
  CHECK(compact == R"({"x":0.33333333333333331,"n":3,"flag":true,"s":"a\"b","v":[0.10000000000000001,2]})");
  CHECK(parse(compact).at("x").get<double>() == third);
  CHECK(dump(j) == dump(parse(dump(j))));
  CHECK(dump(Json::object()) == "{}");
  CHECK(dump(Json::array()) == "[]");
}

TEST_CASE("configurations and polynomials") {
  const auto x = circle::Configuration::from_angles(std::vector<double>{0.5, 7.0});
  const auto back = configuration_from_json(to_json(x));
  CHECK(back.angles() == x.angles());
  const auto p = raked::RakedPolynomial::make({0.0, 0.0}, {0.0, 0.25});
  const auto q = polynomial_from_json(to_json(p));
  CHECK(q.k == 2);
  CHECK(q.b == p.b);
  CHECK(error_code([] { configuration_from_json(Json::object()); }) == "parse-error");
  CHECK(error_code([] { polynomial_from_json(Json{{"a", {1.0}}, {"b", {1.0}}, {"k", 2}}); }) == "parse-error");
  CHECK(error_code([] { parse("[1, 2"); }) == "parse-error");
}

TEST_CASE("boundary points and measures") {
  for (const orbitope::Face& f : std::vector<orbitope::Face>{orbitope::Vertex{1.0}, orbitope::Edge{0.5, 1.5, 0.3},
                                                             orbitope::Triangle{0.2, 0.5, 0.3, 0.2}}) {
    const auto b = orbitope::make_boundary_point(f);
    const auto back = boundary_point_from_json(to_json(b));
    CHECK(back.face.index() == f.index());
    CHECK((back.coordinates - b.coordinates).norm() == 0.0);
  }
  CHECK(error_code([] { boundary_point_from_json(Json{{"face", "square"}}); }) == "parse-error");
  CHECK(error_code([] { boundary_point_from_json(Json{{"face", "edge"}, {"t1", 0.0}, {"t2", 3.0}, {"weight", 0.5}}); }) ==
        "invalid-boundary-point");

  const auto mu = thickening::DiscreteMeasure::make({circle::CirclePoint(0.1), circle::CirclePoint(0.4)}, {0.25, 0.75});
  const auto nu = measure_from_json(to_json(mu));
  REQUIRE(nu.size() == 2);
  CHECK(nu.atoms()[1].weight == 0.75);
  CHECK(error_code([] { measure_from_json(Json::array({Json{{"angle", 0.0}}})); }) == "parse-error");
}

TEST_CASE("certificates") {
  const caratheodory::ConvexCertificate f = caratheodory::Feasible{{0.5, 0.5}, 0.0};
  CHECK(to_json(f).at("type") == "feasible");
  Eigen::VectorXd z(2);
  z << 1.0, 0.0;
  const caratheodory::ConvexCertificate s = caratheodory::Separating{z, 0.5};
  CHECK(to_json(s).at("type") == "separating");
  CHECK(to_json(s).at("z").size() == 2);
}
