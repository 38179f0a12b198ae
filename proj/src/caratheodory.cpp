#include "orbitope_kit/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "orbitope_kit/error.hpp"
#include "orbitope_kit/log.hpp"
#include "orbitope_kit/moment_curve.hpp"
#include "orbitope_kit/random.hpp"
#include "orbitope_kit/simplex.hpp"

namespace orbitope_kit::caratheodory {

namespace {

Eigen::Index common_dimension(std::span<const Vector> vectors) {
  if (vectors.empty()) throw Error("empty-input", "no vectors given");
  const Eigen::Index d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw Error("dimension-mismatch", "vectors of different dimension");
  return d;
}

Matrix as_columns(std::span<const Vector> vectors, Eigen::Index d) {
  Matrix m(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  return m;
}

double combination_residual(std::span<const Vector> vectors, const std::vector<double>& w) {
  Vector acc = Vector::Zero(vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) acc += w[i] * vectors[i];
  return acc.lpNorm<Eigen::Infinity>();
}

double min_dot(const Vector& z, std::span<const Vector> vectors) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : vectors) m = std::min(m, z.dot(v));
  return m;
}

}  // namespace

ConeCheck cone_intersection_check(std::span<const Vector> u, std::span<const Vector> v) {
  if (u.empty() && v.empty()) throw Error("empty-input", "both vector lists are empty");
  const Eigen::Index d = !u.empty() ? u.front().size() : v.front().size();
  for (const auto& x : u)
    if (x.size() != d) throw Error("dimension-mismatch", "U has vectors of different dimension");
  for (const auto& x : v)
    if (x.size() != d) throw Error("dimension-mismatch", "V has vectors of different dimension");

  // Variables: y+ (d), y- (d), delta, then one slack per inequality.
  //   u . y - s = 0,  v . y + delta + s = 0,  y+_l + s = 1,  y-_l + s = 1,  delta + s = 1.
  const Eigen::Index nu = static_cast<Eigen::Index>(u.size());
  const Eigen::Index nv = static_cast<Eigen::Index>(v.size());
  const Eigen::Index rows = nu + nv + 2 * d + 1;
  const Eigen::Index structural = 2 * d + 1;
  const Eigen::Index cols = structural + rows;
  lp::Problem p{Matrix::Zero(rows, cols), Vector::Zero(rows), Vector::Zero(cols)};
  Eigen::Index r = 0;
  for (const auto& x : u) {
    p.A.block(r, 0, 1, d) = x.transpose();
    p.A.block(r, d, 1, d) = -x.transpose();
    p.A(r, structural + r) = -1.0;
    ++r;
  }
  for (const auto& x : v) {
    p.A.block(r, 0, 1, d) = x.transpose();
    p.A.block(r, d, 1, d) = -x.transpose();
    p.A(r, 2 * d) = 1.0;
    p.A(r, structural + r) = 1.0;
    ++r;
  }
  for (Eigen::Index l = 0; l < 2 * d + 1; ++l) {
    p.A(r, l) = 1.0;
    p.A(r, structural + r) = 1.0;
    p.b[r] = 1.0;
    ++r;
  }
  p.c[2 * d] = -1.0;

  const lp::Result res = lp::solve(p);
  if (res.status != lp::Status::kOptimal)
    throw InternalError(std::string("margin LP ended with status ") + lp::to_string(res.status));

  ConeCheck out;
  out.y = res.x.head(d) - res.x.segment(d, d);
  double margin = std::numeric_limits<double>::infinity();
  double worst_u = 0.0;
  for (const auto& x : u) worst_u = std::min(worst_u, x.dot(out.y));
  for (const auto& x : v) margin = std::min(margin, -x.dot(out.y));
  out.margin = v.empty() ? 0.0 : margin;
  out.certified = !v.empty() && out.margin >= kSeparationTol && worst_u >= -1e-12;
  return out;
}

std::optional<Separating> max_margin_separator(std::span<const Vector> vectors) {
  const Eigen::Index d = common_dimension(vectors);
  std::vector<Vector> negated;
  negated.reserve(vectors.size());
  for (const auto& v : vectors) negated.push_back(-v);
  const ConeCheck c = cone_intersection_check({}, negated);
  (void)d;
  if (!c.certified) return std::nullopt;
  const double norm = c.y.norm();
  Separating s{c.y / norm, 0.0};
  s.margin = min_dot(s.z, vectors);
  if (s.margin < kSeparationTol) return std::nullopt;
  return s;
}

ConvexCertificate origin_in_conv(std::span<const Vector> vectors) {
  const Eigen::Index d = common_dimension(vectors);
  const Eigen::Index n = static_cast<Eigen::Index>(vectors.size());

  lp::Problem p{Matrix(d + 1, n), Vector::Zero(d + 1), Vector::Zero(n)};
  p.A.topRows(d) = as_columns(vectors, d);
  p.A.row(d).setOnes();
  p.b[d] = 1.0;
  const lp::Result res = lp::solve(p);

  std::vector<double> weights;
  if (res.status == lp::Status::kOptimal) {
    weights.assign(res.x.data(), res.x.data() + n);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) w /= total;
    const double residual = combination_residual(vectors, weights);
    if (residual <= kFeasibilityTol) return Feasible{std::move(weights), residual};
  } else if (res.status == lp::Status::kInfeasible) {
    // A^T y <= 0 with y = (w, eta), eta = b^T y > 0, so z = -w has z . v >= eta.
    Vector z = -res.farkas.head(d);
    const double norm = z.norm();
    if (norm > 0.0) {
      z /= norm;
      const double margin = min_dot(z, vectors);
      if (margin >= kSeparationTol) return Separating{z, margin};
    }
  } else {
    throw InternalError(std::string("hull LP ended with status ") + lp::to_string(res.status));
  }

  // Borderline instance: fall back to the max-margin separator, then to the
  // phase-one weights.
  log::debug("origin_in_conv: borderline instance, trying max-margin LP");
  if (auto s = max_margin_separator(vectors)) return *s;
  if (!weights.empty()) {
    const double residual = combination_residual(vectors, weights);
    if (residual <= kFeasibilityTol) return Feasible{std::move(weights), residual};
  }
  throw InternalError("origin_in_conv: neither certificate validates");
}

bool validate(const ConvexCertificate& cert, std::span<const Vector> vectors) {
  if (const auto* f = std::get_if<Feasible>(&cert)) {
    if (f->weights.size() != vectors.size()) return false;
    double total = 0.0;
    for (double w : f->weights) {
      if (w < 0.0) return false;
      total += w;
    }
    return std::abs(total - 1.0) <= 1e-9 && combination_residual(vectors, f->weights) <= kFeasibilityTol;
  }
  const auto& s = std::get<Separating>(cert);
  if (std::abs(s.z.norm() - 1.0) > 1e-9) return false;
  for (const auto& v : vectors)
    if (v.size() != s.z.size() || s.z.dot(v) < kSeparationTol) return false;
  return true;
}

std::vector<double> caratheodory_reduce(std::span<const Vector> vectors, std::vector<double> weights) {
  const Eigen::Index d = common_dimension(vectors);
  if (weights.size() != vectors.size()) throw Error("dimension-mismatch", "one weight per vector");
  for (double& w : weights)
    if (w < 1e-15) w = 0.0;

  while (true) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] > 0.0) support.push_back(i);
    if (static_cast<Eigen::Index>(support.size()) <= d + 1) break;

    // Affine dependency among the support: [v; 1] mu = 0.
    Matrix k(d + 1, static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
      k.col(static_cast<Eigen::Index>(j)).head(d) = vectors[support[j]];
      k(d, static_cast<Eigen::Index>(j)) = 1.0;
    }
    Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);
    Vector mu = svd.matrixV().col(svd.matrixV().cols() - 1);
    if (mu.maxCoeff() <= 0.0) mu = -mu;

    double step = std::numeric_limits<double>::infinity();
    std::size_t hit = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      const double m = mu[static_cast<Eigen::Index>(j)];
      if (m > 1e-14 && weights[support[j]] / m < step) {
        step = weights[support[j]] / m;
        hit = j;
      }
    }
    for (std::size_t j = 0; j < support.size(); ++j) {
      double& w = weights[support[j]];
      w -= step * mu[static_cast<Eigen::Index>(j)];
      if (w < 1e-15) w = 0.0;
    }
    weights[support[hit]] = 0.0;
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return weights;
}

// ---------------------------------------------------------------------------

double miss_origin_bound(int k) { return circle::kTwoPi * k / (2.0 * k + 1.0); }

MissOriginReport verify_miss_origin(int k, const Configuration& x) {
  if (k < 1) throw Error("invalid-order", "k must be >= 1");
  if (x.empty()) throw Error("empty-configuration", "no points given");
  std::vector<Vector> images;
  images.reserve(x.size());
  for (const auto& t : x.points()) images.push_back(moment::sm(k, t));

  MissOriginReport report{circle::diameter(x), miss_origin_bound(k), origin_in_conv(images), false};
  const bool below = report.diameter < report.bound - circle::kAngleEps;
  report.consistent = !below || !is_feasible(report.certificate);
  return report;
}

// ---------------------------------------------------------------------------

CircleMapTable sample_circle_map(const std::function<Vector(double)>& f, int grid) {
  if (grid < 3) throw Error("grid-too-coarse", "grid must be >= 3");
  CircleMapTable table;
  table.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double t = circle::kTwoPi * i / grid;
    table.push_back({t, f(t)});
  }
  return table;
}

void for_each_window(int n, int w, const std::function<bool(const std::vector<int>&)>& visit) {
  if (n < 2 || n % 2 != 0) throw Error("invalid-grid", "window enumeration needs an even grid");
  std::vector<int> idx;
  const int half = n / 2;
  if (w >= half) {
    idx.resize(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    visit(idx);
    return;
  }
  w = std::max(w, 0);
  // A set X is a window iff X and X + pi stay >= g steps apart. Maximal ones
  // split X u (X + pi) into 2m alternating contiguous runs (m odd) separated
  // by gaps of exactly g steps; X takes the even-numbered runs.
  const int g = half - w;
  std::vector<int> runs;
  std::vector<int> offsets;
  for (int m = 1;; m += 2) {
    const int total = half - m * (g - 1);
    if (total < m) break;
    runs.assign(static_cast<std::size_t>(m), 1);
    offsets.assign(static_cast<std::size_t>(2 * m), 0);
    for (int s0 = 0; s0 < n; ++s0) {
      // Lexicographic compositions of `total` into m positive parts.
      bool more = true;
      runs.assign(static_cast<std::size_t>(m), 1);
      runs.back() = total - (m - 1);
      while (more) {
        for (int j = 1; j < 2 * m; ++j)
          offsets[static_cast<std::size_t>(j)] =
              offsets[static_cast<std::size_t>(j - 1)] + runs[static_cast<std::size_t>((j - 1) % m)] + g - 1;
        // Each window is generated once: R_0 must be the X-run with the
        // smallest start index.
        if (s0 + offsets[static_cast<std::size_t>(2 * m - 2)] < n) {
          idx.clear();
          for (int j = 0; j < 2 * m; j += 2) {
            const int start = s0 + offsets[static_cast<std::size_t>(j)];
            const int len = runs[static_cast<std::size_t>(j % m)];
            for (int q = 0; q < len; ++q) idx.push_back((start + q) % n);
          }
          if (!visit(idx)) return;
        }
        // Next composition: bump the rightmost part whose tail still has slack.
        more = false;
        int slack = 0;
        for (int j = m - 2; j >= 0; --j) {
          slack += runs[static_cast<std::size_t>(j + 1)] - 1;
          if (slack > 0) {
            runs[static_cast<std::size_t>(j)] += 1;
            for (int q = j + 1; q < m - 1; ++q) runs[static_cast<std::size_t>(q)] = 1;
            int used = 0;
            for (int q = 0; q < m - 1; ++q) used += runs[static_cast<std::size_t>(q)];
            runs.back() = total - used;
            more = true;
            break;
          }
        }
      }
    }
  }
}

std::optional<CircleWitness> bu_circle_search(const CircleMapTable& f, double diameter_bound, int grid) {
  if (grid < 3) throw Error("grid-too-coarse", "grid must be >= 3");
  if (static_cast<int>(f.size()) != grid)
    throw Error("dimension-mismatch", "table has " + std::to_string(f.size()) + " samples, grid is " +
                                          std::to_string(grid));
  if (grid % 2 != 0) throw Error("not-odd", "odd grid has no antipodal samples to check oddness");

  CircleMapTable table = f;
  std::sort(table.begin(), table.end(),
            [](const CircleSample& a, const CircleSample& b) { return a.angle < b.angle; });
  const Eigen::Index d = table.front().value.size();
  const double h = circle::kTwoPi / grid;
  for (int i = 0; i < grid; ++i) {
    const auto& s = table[static_cast<std::size_t>(i)];
    if (std::abs(s.angle - h * i) > 1e-9)
      throw Error("dimension-mismatch", "samples do not cover a uniform grid");
    if (s.value.size() != d) throw Error("dimension-mismatch", "samples of different dimension");
  }
  Matrix values(d, grid);
  for (int i = 0; i < grid; ++i) values.col(i) = table[static_cast<std::size_t>(i)].value;
  for (int i = 0; i < grid / 2; ++i) {
    const double err = (values.col(i) + values.col(i + grid / 2)).lpNorm<Eigen::Infinity>();
    if (err > 1e-9) throw Error("not-odd", "f(t + pi) != -f(t) at sample " + std::to_string(i));
  }

  const int w = static_cast<int>(std::lround(std::max(diameter_bound, 0.0) / h));
  std::deque<Vector> recent;  // separators that worked on earlier windows
  std::optional<CircleWitness> found;
  std::size_t windows = 0;
  std::size_t solved = 0;
  std::vector<Vector> images;

  for_each_window(grid, w, [&](const std::vector<int>& idx) {
    ++windows;
    for (const auto& z : recent) {
      bool separated = true;
      for (int i : idx) {
        if (z.dot(values.col(i)) < kSeparationTol) {
          separated = false;
          break;
        }
      }
      if (separated) return true;
    }
    ++solved;
    images.clear();
    for (int i : idx) images.emplace_back(values.col(i));
    const ConvexCertificate cert = origin_in_conv(images);
    if (const auto* s = std::get_if<Separating>(&cert)) {
      recent.push_front(s->z);
      if (recent.size() > 8) recent.pop_back();
      return true;
    }
    const auto reduced = caratheodory_reduce(images, std::get<Feasible>(cert).weights);
    CircleWitness witness;
    std::vector<circle::CirclePoint> pts;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (reduced[j] > 0.0) {
        pts.emplace_back(h * idx[j]);
        witness.weights.push_back(reduced[j]);
      }
    }
    witness.points = circle::Configuration(std::move(pts));
    witness.diameter = circle::diameter(witness.points);
    found = std::move(witness);
    return false;
  });
  log::info("bu_circle_search: grid " + std::to_string(grid) + ", w " + std::to_string(w) + ", windows " +
            std::to_string(windows) + ", LP solves " + std::to_string(solved));
  return found;
}

// ---------------------------------------------------------------------------

double sphere_dist(const Vector& a, const Vector& b) {
  return std::acos(std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0));
}

double simplex_diameter(int n) { return std::acos(-1.0 / (n + 1.0)); }

std::vector<Vector> regular_simplex(int n) {
  if (n < 1) throw Error("invalid-dimension", "n must be >= 1");
  const Eigen::Index dim = n + 2;
  // Orthonormal basis of the hyperplane orthogonal to (1, ..., 1).
  Matrix ones = Matrix::Ones(dim, 1);
  Eigen::HouseholderQR<Matrix> qr(ones);
  const Matrix q = qr.householderQ();
  const Matrix basis = q.rightCols(dim - 1);
  std::vector<Vector> out;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector e = Vector::Constant(dim, -1.0 / static_cast<double>(dim));
    e[i] += 1.0;
    Vector v = basis.transpose() * e;
    out.push_back(v / v.norm());
  }
  return out;
}

SphereMapTable sample_sphere_map(int n, int count, std::uint64_t seed,
                                 const std::function<Vector(const Vector&)>& f,
                                 std::span<const Vector> extra) {
  if (n < 1) throw Error("invalid-dimension", "n must be >= 1");
  Rng rng(seed);
  SphereMapTable table;
  auto push = [&](const Vector& p) {
    table.points.push_back(p);
    table.values.push_back(f(p));
    table.points.push_back(-p);
    table.values.push_back(f(-p));
  };
  for (int i = 0; i < count / 2; ++i) {
    Vector p(n + 1);
    for (Eigen::Index j = 0; j <= n; ++j) p[j] = rng.normal();
    push(p / p.norm());
  }
  for (const auto& e : extra) push(e / e.norm());
  return table;
}

SphereSearchResult bu_sphere_search(const SphereMapTable& f, double diameter_bound, int trials,
                                    std::uint64_t seed) {
  const std::size_t count = f.points.size();
  if (count == 0) throw Error("empty-input", "no samples");
  if (f.values.size() != count) throw Error("dimension-mismatch", "one value per sample point");
  const Eigen::Index ambient = f.points.front().size();
  if (ambient < 3) throw Error("invalid-dimension", "sphere search needs n >= 2");
  const Eigen::Index d = f.values.front().size();
  for (std::size_t i = 0; i < count; ++i) {
    if (f.points[i].size() != ambient || f.values[i].size() != d)
      throw Error("dimension-mismatch", "samples of different dimension");
  }

  Matrix pts(ambient, static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) pts.col(static_cast<Eigen::Index>(i)) = f.points[i].normalized();
  const Matrix gram = pts.transpose() * pts;

  // Antipode closure and oddness.
  for (std::size_t i = 0; i < count; ++i) {
    Eigen::Index j = 0;
    const double lowest = gram.row(static_cast<Eigen::Index>(i)).minCoeff(&j);
    if (lowest > -1.0 + 1e-9) throw Error("not-odd", "sample set is not closed under antipodes");
    if ((f.values[i] + f.values[static_cast<std::size_t>(j)]).lpNorm<Eigen::Infinity>() > 1e-9)
      throw Error("not-odd", "f(-x) != -f(x) at sample " + std::to_string(i));
  }

  const double cos_bound = std::cos(std::min(diameter_bound, circle::kPi)) - 1e-12;
  Rng rng(seed);
  SphereSearchResult out;
  out.best_margin = std::numeric_limits<double>::infinity();
  std::deque<Vector> recent;
  std::vector<Eigen::Index> candidates;
  std::vector<Eigen::Index> clique;
  std::vector<Vector> images;

  for (int trial = 0; trial < trials; ++trial) {
    out.trials_run = trial + 1;
    const auto center = static_cast<Eigen::Index>(rng.index(count));
    candidates.clear();
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(count); ++i)
      if (i != center && gram(center, i) >= cos_bound) candidates.push_back(i);
    if (trial % 2 == 0) {
      // Farthest first: favours sets that stretch to the full diameter.
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](Eigen::Index a, Eigen::Index b) { return gram(center, a) < gram(center, b); });
    } else {
      for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.index(i)]);
    }
    clique.assign(1, center);
    for (Eigen::Index c : candidates) {
      bool ok = true;
      for (Eigen::Index q : clique) {
        if (gram(c, q) < cos_bound) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(c);
    }

    bool separated = false;
    for (const auto& z : recent) {
      double m = std::numeric_limits<double>::infinity();
      for (Eigen::Index q : clique) m = std::min(m, z.dot(f.values[static_cast<std::size_t>(q)]));
      if (m >= kSeparationTol) {
        out.best_margin = std::min(out.best_margin, m);
        separated = true;
        break;
      }
    }
    if (separated) continue;

    images.clear();
    for (Eigen::Index q : clique) images.push_back(f.values[static_cast<std::size_t>(q)]);
    const ConvexCertificate cert = origin_in_conv(images);
    if (const auto* s = std::get_if<Separating>(&cert)) {
      out.best_margin = std::min(out.best_margin, s->margin);
      recent.push_front(s->z);
      if (recent.size() > 8) recent.pop_back();
      continue;
    }
    const auto reduced = caratheodory_reduce(images, std::get<Feasible>(cert).weights);
    SphereWitness w;
    for (std::size_t j = 0; j < clique.size(); ++j) {
      if (reduced[j] > 0.0) {
        w.points.push_back(f.points[static_cast<std::size_t>(clique[j])]);
        w.weights.push_back(reduced[j]);
      }
    }
    for (std::size_t a = 0; a < w.points.size(); ++a)
      for (std::size_t b = a + 1; b < w.points.size(); ++b)
        w.diameter = std::max(w.diameter, sphere_dist(w.points[a], w.points[b]));
    out.witness = std::move(w);
    out.best_margin = 0.0;
    return out;
  }
  return out;
}

}  // namespace orbitope_kit::caratheodory
