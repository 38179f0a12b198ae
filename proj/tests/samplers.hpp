#pragma once

#include <numbers>

#include "orbitope_kit/orbitope_b4.hpp"
#include "orbitope_kit/random.hpp"

namespace samplers {

using namespace orbitope_kit;

inline orbitope::Face random_face(Rng& rng, orbitope::FaceType type) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  switch (type) {
    case orbitope::FaceType::kVertex:
      return orbitope::Vertex{rng.uniform(0.0, kTwoPi)};
    case orbitope::FaceType::kEdge: {
      const double t1 = rng.uniform(0.0, kTwoPi);
      const double len = rng.uniform(0.05, kTwoPi / 3.0);
      return orbitope::Edge{t1, circle::canonical_angle(t1 + len), rng.uniform(0.05, 0.95)};
    }
    default: {
      double w[3];
      do {
        double total = 0.0;
        for (double& x : w) total += (x = rng.exponential());
        for (double& x : w) x /= total;
      } while (std::min({w[0], w[1], w[2]}) < 0.05);
      return orbitope::Triangle{rng.uniform(0.0, kTwoPi / 3.0), w[0], w[1], w[2]};
    }
  }
}

/// Largest parameter discrepancy between two faces of the same type (angles
/// compared on the circle); infinity when the types differ.
inline double face_distance(const orbitope::Face& a, const orbitope::Face& b) {
  if (a.index() != b.index()) return INFINITY;
  auto ad = [](double x, double y) { return circle::geodesic_dist(circle::CirclePoint(x), circle::CirclePoint(y)); };
  if (const auto* v = std::get_if<orbitope::Vertex>(&a)) return ad(v->t, std::get<orbitope::Vertex>(b).t);
  if (const auto* e = std::get_if<orbitope::Edge>(&a)) {
    const auto& f = std::get<orbitope::Edge>(b);
    return std::max({ad(e->t1, f.t1), ad(e->t2, f.t2), std::abs(e->weight - f.weight)});
  }
  const auto& s = std::get<orbitope::Triangle>(a);
  const auto& t = std::get<orbitope::Triangle>(b);
  return std::max({ad(s.t, t.t), std::abs(s.w1 - t.w1), std::abs(s.w2 - t.w2), std::abs(s.w3 - t.w3)});
}

}  // namespace samplers
