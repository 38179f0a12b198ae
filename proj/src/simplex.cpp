#include "orbitope_kit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitope_kit/error.hpp"

namespace orbitope_kit::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
    case Status::kIterationLimit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kRefactorEvery = 25;

// Basis matrix over [A | I].
Matrix basis_matrix(const Matrix& A, const std::vector<int>& basis) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  Matrix B = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int bi = basis[static_cast<std::size_t>(i)];
    if (bi < n) {
      B.col(i) = A.col(bi);
    } else {
      B(bi - n, i) = 1.0;
    }
  }
  return B;
}

// Rows 0..m-1 hold the constraints, row m the reduced costs. Columns 0..n-1
// are the original variables, n..n+m-1 the artificials, the last one the RHS
// (objective row RHS = -objective). The tableau is rebuilt from A and b every
// few pivots so rounding does not accumulate.
class Tableau {
 public:
  Tableau(const Matrix& A, const Vector& b)
      : m_(A.rows()), n_(A.cols()), A_(A), b_(b), t_(m_ + 1, n_ + m_ + 1), cost_(Vector::Zero(n_ + m_)) {
    t_.setZero();
    t_.topLeftCorner(m_, n_) = A;
    t_.block(0, n_, m_, m_).setIdentity();
    t_.col(rhs()).head(m_) = b;
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = static_cast<int>(n_ + i);
  }

  Eigen::Index rhs() const { return n_ + m_; }
  RowMatrix& data() { return t_; }
  std::vector<int>& basis() { return basis_; }

  void set_costs(const Vector& full_cost) {
    cost_ = full_cost;
    t_.row(m_).setZero();
    t_.row(m_).head(n_ + m_) = full_cost.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double cb = full_cost[basis_[static_cast<std::size_t>(i)]];
      if (cb != 0.0) t_.row(m_) -= cb * t_.row(i);
    }
  }

  void refactor() {
    Matrix rhs_block(m_, n_ + m_ + 1);
    rhs_block.leftCols(n_) = A_;
    rhs_block.block(0, n_, m_, m_).setIdentity();
    rhs_block.col(rhs()) = b_;
    Eigen::PartialPivLU<Matrix> lu(basis_matrix(A_, basis_));
    t_.topRows(m_) = lu.solve(rhs_block);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index bi = basis_[static_cast<std::size_t>(i)];
      t_.col(bi).head(m_).setZero();
      t_(i, bi) = 1.0;
    }
    set_costs(cost_);
  }

  double objective() const { return -t_(m_, rhs()); }

  bool is_basic(Eigen::Index j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  void pivot(Eigen::Index r, Eigen::Index q) {
    t_.row(r) /= t_(r, q);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = t_(i, q);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    t_(r, q) = 1.0;
    basis_[static_cast<std::size_t>(r)] = static_cast<int>(q);
  }

  // Bland's rule over columns [0, allowed).
  // In phase two (allowed == n) a basic artificial must stay at zero, so it
  // also blocks when its entry is negative.
  Status iterate(Eigen::Index allowed, const Options& opt, int& iterations) {
    const bool phase_two = allowed == n_;
    int since_refactor = 0;
    while (true) {
      if (iterations >= opt.max_iterations) return Status::kIterationLimit;
      if (since_refactor >= kRefactorEvery) {
        refactor();
        since_refactor = 0;
      }
      Eigen::Index q = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (t_(m_, j) < -opt.cost_tol && !is_basic(j)) {
          q = j;
          break;
        }
      }
      if (q < 0) {
        if (since_refactor > 0) {
          refactor();
          since_refactor = 0;
          continue;
        }
        return Status::kOptimal;
      }

      auto blocks = [&](Eigen::Index i) {
        const double a = t_(i, q);
        if (a > opt.pivot_tol) return true;
        return phase_two && basis_[static_cast<std::size_t>(i)] >= n_ && a < -opt.pivot_tol;
      };
      auto ratio = [&](Eigen::Index i) { return std::max(0.0, t_(i, rhs())) / std::abs(t_(i, q)); };

      Eigen::Index r = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!blocks(i)) continue;
        const double rt = ratio(i);
        const double slack = 1e-12 * std::max(1.0, best);
        if (r < 0 || rt < best - slack ||
            (rt <= best + slack && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)])) {
          best = std::min(best, rt);
          r = i;
        }
      }
      if (r < 0) {
        if (since_refactor > 0) {
          refactor();
          since_refactor = 0;
          continue;
        }
        return Status::kUnbounded;
      }
      pivot(r, q);
      ++iterations;
      ++since_refactor;
    }
  }

 private:
  Eigen::Index m_;
  Eigen::Index n_;
  Matrix A_;
  Vector b_;
  RowMatrix t_;
  Vector cost_;
  std::vector<int> basis_;
};

}  // namespace

Result solve(const Problem& problem, const Options& opt) {
  const Matrix& A0 = problem.A;
  const Eigen::Index m = A0.rows();
  const Eigen::Index n = A0.cols();
  if (problem.b.size() != m || problem.c.size() != n)
    throw Error("dimension-mismatch", "LP data has inconsistent sizes");

  // Flip rows so that b >= 0; the artificial basis is then feasible.
  Vector sign = Vector::Ones(m);
  Matrix A = A0;
  Vector b = problem.b;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      sign[i] = -1.0;
      A.row(i) *= -1.0;
      b[i] = -b[i];
    }
  }

  Result res;
  Tableau tab(A, b);

  Vector phase1 = Vector::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.set_costs(phase1);
  Status st = tab.iterate(n + m, opt, res.iterations);
  if (st == Status::kIterationLimit) {
    res.status = st;
    return res;
  }

  const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
  res.infeasibility = tab.objective();
  auto& basis = tab.basis();
  auto& t = tab.data();

  if (res.infeasibility > opt.feasibility_tol * scale) {
    res.status = Status::kInfeasible;
    res.basis = basis;
    // Phase-one duals: B^T y = c_B with unit cost on artificials.
    Matrix B = basis_matrix(A, basis);
    Vector cb(m);
    for (Eigen::Index i = 0; i < m; ++i) cb[i] = basis[static_cast<std::size_t>(i)] >= n ? 1.0 : 0.0;
    Vector y = B.transpose().partialPivLu().solve(cb);
    res.farkas = sign.cwiseProduct(y);
    res.x = Vector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
      const int bi = basis[static_cast<std::size_t>(i)];
      if (bi < n) res.x[bi] = t(i, tab.rhs());
    }
    return res;
  }

  // Drive remaining artificials out of the basis; rows with no usable pivot
  // are linearly dependent on the others.
  std::vector<bool> basic(static_cast<std::size_t>(n + m), false);
  for (int bi : basis) basic[static_cast<std::size_t>(bi)] = true;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] < n) continue;
    Eigen::Index q = -1;
    double best = opt.pivot_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!basic[static_cast<std::size_t>(j)] && std::abs(t(i, j)) > best) {
        best = std::abs(t(i, j));
        q = j;
      }
    }
    if (q < 0) continue;
    basic[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = false;
    basic[static_cast<std::size_t>(q)] = true;
    tab.pivot(i, q);
  }

  Vector full_cost = Vector::Zero(n + m);
  full_cost.head(n) = problem.c;
  tab.set_costs(full_cost);
  tab.refactor();
  st = tab.iterate(n, opt, res.iterations);
  res.status = st;
  res.basis = basis;
  if (st != Status::kOptimal) return res;

  Matrix B = basis_matrix(A, basis);
  Eigen::PartialPivLU<Matrix> lu(B);
  Vector xb = lu.solve(b);
  Vector cb = Vector::Zero(m);
  res.x = Vector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int bi = basis[static_cast<std::size_t>(i)];
    if (bi < n) {
      res.x[bi] = std::max(0.0, xb[i]);
      cb[i] = problem.c[bi];
    }
  }
  res.duals = sign.cwiseProduct(B.transpose().partialPivLu().solve(cb));
  res.objective = problem.c.dot(res.x);
  return res;
}

}  // namespace orbitope_kit::lp
