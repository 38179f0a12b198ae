#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitope_kit/circle.hpp"
#include "orbitope_kit/random.hpp"

namespace orbitope_kit::thickening {

using Vector = Eigen::VectorXd;
using circle::CirclePoint;
using circle::Configuration;

/// Atoms closer than this (radians) are merged.
inline constexpr double kMergeRadius = 1e-9;
/// Atoms lighter than this are dropped.
inline constexpr double kMinWeight = 1e-12;

struct Atom {
  CirclePoint point;
  double weight = 0.0;
};

/// Finitely supported probability measure on S^1 in canonical form: atoms
/// sorted by angle, pairwise farther apart than kMergeRadius, weights
/// positive and summing to one.
class DiscreteMeasure {
 public:
  /// Validates and canonicalizes. Throws "invalid-weights" for length
  /// mismatch, empty input, negative or non-finite weights, or a total off
  /// from one by more than 1e-9.
  static DiscreteMeasure make(const std::vector<CirclePoint>& points, const std::vector<double>& weights);

  static DiscreteMeasure dirac(CirclePoint t);

  /// (1 - s) a + s b, canonicalized.
  static DiscreteMeasure mixture(const DiscreteMeasure& a, const DiscreteMeasure& b, double s);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  Configuration support() const;
  std::vector<double> weights() const;
  double support_diameter() const;

 private:
  explicit DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  static DiscreteMeasure canonical(std::vector<Atom> atoms);

  std::vector<Atom> atoms_;
};

/// A point of the thickening VR(S^1; r). Throws "invalid-scale" (r < 0),
/// "invalid-weights", or "diameter-exceeds-scale".
DiscreteMeasure make_measure(const std::vector<CirclePoint>& points, const std::vector<double>& weights, double r);

struct TransportEntry {
  std::size_t source = 0;
  std::size_t target = 0;
  double mass = 0.0;
};

struct TransportPlan {
  std::vector<TransportEntry> entries;
  double cost = 0.0;
};

/// 1-Wasserstein distance with geodesic ground cost. Uses a closed form when
/// either side is a single atom and the transportation LP otherwise.
TransportPlan wasserstein1(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Always solves the transportation LP.
TransportPlan wasserstein1_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// sum_i w_i sm(k, t_i). Throws InternalError if the result vanishes although
/// the support diameter is below 2 pi k / (2k + 1).
Vector pushforward_sm(int k, const DiscreteMeasure& mu);

/// Support diameter allowed along the straight-line homotopy at k = 2.
inline constexpr double kHomotopyScale = 2.0 * circle::kPi / 3.0;

/// (1 - s) mu + s iota(p(SM_4(mu))). Errors: "invalid-parameter" (s outside
/// [0, 1]), "diameter-exceeds-scale" (mu wider than 2 pi / 3),
/// "homotopy-not-well-defined" (result wider than 2 pi / 3).
DiscreteMeasure homotopy_step(const DiscreteMeasure& mu, double s);

/// Support size uniform in {1..6}, angles uniform in a uniformly placed arc
/// of length r, flat Dirichlet weights.
DiscreteMeasure random_measure(Rng& rng, double r);

struct ProbeReport {
  int k = 0;
  double r = 0.0;
  int trials = 0;
  double max_excess = 0.0;
  double mean_excess = 0.0;
  std::uint64_t seed = 0;
};

/// diam(supp(mu) u supp(iota(p(SM_2k(mu))))) - diam(supp(mu)).
double union_diameter_excess(int k, const DiscreteMeasure& mu, int grid = 720);

/// Samples random measures of support diameter <= r and records the excess.
/// Throws "invalid-scale" unless 2 pi (k-1)/(2k-1) <= r < 2 pi k/(2k+1), and
/// "invalid-parameter" for trials < 1.
ProbeReport homotopy_probe(int k, double r, int trials, std::uint64_t seed, int grid = 720);

}  // namespace orbitope_kit::thickening
