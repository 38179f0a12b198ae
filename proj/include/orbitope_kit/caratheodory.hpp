#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "orbitope_kit/circle.hpp"

namespace orbitope_kit::caratheodory {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using circle::Configuration;

/// |sum w_i v_i|_inf allowed for a Feasible certificate.
inline constexpr double kFeasibilityTol = 1e-8;
/// Minimum z . v_i (|z|_2 = 1) for a Separating certificate.
inline constexpr double kSeparationTol = 1e-9;

struct Feasible {
  std::vector<double> weights;  ///< convex weights, one per input vector
  double residual = 0.0;        ///< |sum w_i v_i|_inf
};

struct Separating {
  Vector z;             ///< unit normal with z . v_i >= margin for all i
  double margin = 0.0;  ///< min_i z . v_i
};

/// Exactly one alternative holds for any finite vector list: the origin is a
/// convex combination of the vectors, or a hyperplane strictly separates them
/// from it.
using ConvexCertificate = std::variant<Feasible, Separating>;

inline bool is_feasible(const ConvexCertificate& c) { return std::holds_alternative<Feasible>(c); }

/// Throws "empty-input" / "dimension-mismatch".
ConvexCertificate origin_in_conv(std::span<const Vector> vectors);

/// Re-checks a certificate against the vectors at the module tolerances.
bool validate(const ConvexCertificate& cert, std::span<const Vector> vectors);

/// Shrinks the support of convex weights with sum w_i v_i = 0 to at most
/// d + 1 vectors (d = ambient dimension) while keeping the combination.
std::vector<double> caratheodory_reduce(std::span<const Vector> vectors, std::vector<double> weights);

/// Result of the Farkas-style cone test: `certified` means a y was found with
/// u . y >= 0 for all u in U and v . y <= -margin for all v in V, which proves
/// cone(U) and cone(V) meet only at the origin. Not certified is inconclusive.
struct ConeCheck {
  bool certified = false;
  Vector y;
  double margin = 0.0;
};

ConeCheck cone_intersection_check(std::span<const Vector> u, std::span<const Vector> v);

/// Largest-margin unit separator of the vectors from the origin, if any.
std::optional<Separating> max_margin_separator(std::span<const Vector> vectors);

// ---------------------------------------------------------------------------
// Diameter bound on the symmetric moment curve.

struct MissOriginReport {
  double diameter = 0.0;
  double bound = 0.0;  ///< 2 pi k / (2k + 1)
  ConvexCertificate certificate;
  bool consistent = false;  ///< diameter < bound implies Separating
};

double miss_origin_bound(int k);

MissOriginReport verify_miss_origin(int k, const Configuration& x);

// ---------------------------------------------------------------------------
// Witness search for odd maps S^1 -> R^d sampled on a uniform grid.

struct CircleSample {
  double angle = 0.0;
  Vector value;
};
using CircleMapTable = std::vector<CircleSample>;

/// Samples f at 2 pi i / grid, i = 0..grid-1.
CircleMapTable sample_circle_map(const std::function<Vector(double)>& f, int grid);

struct CircleWitness {
  Configuration points;
  std::vector<double> weights;
  double diameter = 0.0;
};

/// Calls `visit` with the grid indices of every maximal subset of the n-point
/// grid whose pairwise circular index distance is at most w. Enumeration
/// order: number of runs, then start index, then run lengths
/// lexicographically. Stops early when `visit` returns false.
void for_each_window(int n, int w, const std::function<bool(const std::vector<int>&)>& visit);

/// Scans every maximal grid set of diameter <= diameter_bound (bound rounded
/// to the nearest grid step) and returns the first whose image captures the
/// origin, reduced to at most d + 1 points. Errors: "grid-too-coarse",
/// "not-odd", "dimension-mismatch".
std::optional<CircleWitness> bu_circle_search(const CircleMapTable& f, double diameter_bound, int grid);

// ---------------------------------------------------------------------------
// Randomized witness search for odd maps S^n -> R^d on an antipode-closed
// sample.

struct SphereMapTable {
  std::vector<Vector> points;  ///< unit vectors in R^{n+1}
  std::vector<Vector> values;  ///< f(points[i])
};

struct SphereWitness {
  std::vector<Vector> points;
  std::vector<double> weights;
  double diameter = 0.0;
};

struct SphereSearchResult {
  std::optional<SphereWitness> witness;
  /// Smallest separation margin seen over unsuccessful trials.
  double best_margin = 0.0;
  int trials_run = 0;
};

double sphere_dist(const Vector& a, const Vector& b);

/// r_n = arccos(-1/(n+1)), the diameter of a regular (n+1)-simplex on S^n.
double simplex_diameter(int n);

/// The n+2 vertices of a regular simplex inscribed in S^n, as vectors of R^{n+1}.
std::vector<Vector> regular_simplex(int n);

/// count/2 seeded uniform points on S^n together with their antipodes, plus
/// `extra` points (and their antipodes), evaluated through f.
SphereMapTable sample_sphere_map(int n, int count, std::uint64_t seed,
                                 const std::function<Vector(const Vector&)>& f,
                                 std::span<const Vector> extra = {});

/// Errors: "invalid-dimension" (n < 2), "not-odd", "dimension-mismatch",
/// "empty-input".
SphereSearchResult bu_sphere_search(const SphereMapTable& f, double diameter_bound, int trials,
                                    std::uint64_t seed);

}  // namespace orbitope_kit::caratheodory
