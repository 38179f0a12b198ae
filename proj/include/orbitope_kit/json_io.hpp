#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <string>

#include "orbitope_kit/caratheodory.hpp"
#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/raked_poly.hpp"
#include "orbitope_kit/thickening.hpp"

namespace orbitope_kit::json_io {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed to 17 significant
/// digits, so equal values always give identical bytes.
std::string dump(const Json& j, int indent = 2);

/// Parses text; throws "parse-error".
Json parse(const std::string& text);

Json to_json(const Eigen::VectorXd& v);
Json to_json(const circle::Configuration& x);
Json to_json(const caratheodory::ConvexCertificate& c);
Json to_json(const caratheodory::MissOriginReport& r);
Json to_json(const caratheodory::CircleWitness& w);
Json to_json(const caratheodory::SphereWitness& w);
Json to_json(const moment::NullspaceVector& n);
Json to_json(const raked::RakedPolynomial& p);
Json to_json(const orbitope::Face& f);
Json to_json(const orbitope::BoundaryPointB4& b);
Json to_json(const orbitope::GaugeResult& g);
Json to_json(const thickening::DiscreteMeasure& mu);
Json to_json(const thickening::TransportPlan& plan);
Json to_json(const thickening::ProbeReport& r);

// Readers throw "parse-error" on malformed input and the owning module's
// errors on invalid content.
Eigen::VectorXd vector_from_json(const Json& j);
circle::Configuration configuration_from_json(const Json& j);
raked::RakedPolynomial polynomial_from_json(const Json& j);
orbitope::BoundaryPointB4 boundary_point_from_json(const Json& j);
thickening::DiscreteMeasure measure_from_json(const Json& j);

}  // namespace orbitope_kit::json_io
