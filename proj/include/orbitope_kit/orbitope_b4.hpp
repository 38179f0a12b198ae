#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/thickening.hpp"

namespace orbitope_kit::orbitope {

using Vector = Eigen::VectorXd;
using circle::CirclePoint;
using circle::Configuration;

inline constexpr int kDefaultGrid = 720;
/// Longest arc spanned by an edge of B_4.
inline constexpr double kEdgeArc = 2.0 * circle::kPi / 3.0;

struct Vertex {
  double t = 0.0;
};

/// w sm(t1) + (1 - w) sm(t2); the counterclockwise arc t1 -> t2 is the short one.
struct Edge {
  double t1 = 0.0;
  double t2 = 0.0;
  double weight = 0.5;
};

/// Weights on t, t + 2pi/3, t + 4pi/3 with t in [0, 2pi/3).
struct Triangle {
  double t = 0.0;
  double w1 = 1.0 / 3.0;
  double w2 = 1.0 / 3.0;
  double w3 = 1.0 / 3.0;
};

using Face = std::variant<Vertex, Edge, Triangle>;

enum class FaceType { kVertex, kEdge, kTriangle, kNotAFace };

const char* to_string(FaceType f);
FaceType face_type(const Face& f);

struct BoundaryPointB4 {
  Face face;
  Vector coordinates;  ///< point of the boundary of B_4 in R^4
};

/// Throws "invalid-boundary-point" unless the face data satisfy the face
/// conditions of B_4.
void validate_face(const Face& f);

/// Circle atoms (angle, weight) of a face.
std::vector<thickening::Atom> face_atoms(const Face& f);

/// Barycentric point sum_i w_i sm(2, t_i) of a face.
Vector face_coordinates(const Face& f);

/// Validates the face and attaches its coordinates.
BoundaryPointB4 make_boundary_point(const Face& f);

struct GaugeResult {
  double scale = 0.0;  ///< largest s with s x in B_{2k}
  std::vector<thickening::Atom> support;
  bool refined = false;
  std::optional<Face> face;  ///< set when refined in dimension 4
};

/// Grid LP: max s subject to s x = sum_i l_i sm(k, 2 pi i / grid), l in the
/// simplex. An inner approximation: the returned scale is a lower bound.
/// Errors: "zero-vector", "dimension-mismatch", "grid-too-coarse" (< 90).
GaugeResult gauge_lp(const Vector& x, int grid = kDefaultGrid);

/// Gauge of B_{2k} in the direction x. Dimension 2 is closed form; dimension
/// 4 is the grid LP polished onto a face; higher dimensions stop at the LP.
GaugeResult gauge(const Vector& x, int grid = kDefaultGrid);

/// The point of the boundary of B_4 on the ray through x, with its face.
/// Errors: as gauge, plus "refinement-failed" if no face fits.
BoundaryPointB4 radial_project(const Vector& x, int grid = kDefaultGrid);

/// The measure sum_i w_i delta_{t_i} of the face.
thickening::DiscreteMeasure iota(const BoundaryPointB4& b);

/// Face type of conv(SM_4(angles)) for 1-3 distinct angles; NotAFace for
/// more. Throws "empty-configuration" or "degenerate-configuration".
FaceType classify_face(const Configuration& angles);

/// The segment between sm(k, t0) and sm(k, t1) is an edge of B_{2k} by the
/// arc bound 2 pi (k-1)/(2k-1). Throws "equal-points" or "invalid-order".
bool edge_predicate_b2k(int k, CirclePoint t0, CirclePoint t1);

double edge_arc_bound(int k);

}  // namespace orbitope_kit::orbitope
