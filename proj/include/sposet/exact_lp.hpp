#pragma once

// Dense two-phase simplex and Gaussian elimination over an exact field.
//
// Everything here is templated on the scalar; the library instantiates it with
// Rational. Pivoting follows Bland's rule, so termination does not depend on
// any tie-breaking tolerance and no comparison is ever approximate.

#include <optional>
#include <utility>
#include <vector>

#include "sposet/rational.hpp"

namespace sposet::lp {

enum class Status { optimal, infeasible, unbounded };

template <typename Scalar>
struct Result {
  Status status = Status::infeasible;
  Scalar value{};
  Vector<Scalar> solution;
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  // Rows [0, m) are constraints, row m is the reduced-cost row. The last
  // column is the right-hand side; t(m, rhs) holds minus the objective value.
  Matrix<Scalar> t;
  std::vector<Eigen::Index> basis;

  Eigen::Index rows() const { return t.rows() - 1; }
  Eigen::Index rhs() const { return t.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = t(r, c);
    t.row(r) /= p;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i == r || t(i, c) == 0) continue;
      const Scalar f = t(i, c);
      t.row(i) -= f * t.row(r);
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Runs simplex iterations over columns [0, allowed). Returns false when the
  // objective is unbounded below.
  bool run(Eigen::Index allowed) {
    const Eigen::Index m = rows();
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (t(m, j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (t(i, entering) <= 0) continue;
        Scalar ratio = t(i, rhs()) / t(i, entering);
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace detail

/// Minimizes <c, y> subject to A y = b and y >= 0.
template <typename Scalar>
Result<Scalar> minimize_standard(const Matrix<Scalar>& A, const Vector<Scalar>& b, const Vector<Scalar>& c) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  Result<Scalar> result;

  // Phase 1 over [A | I] with artificial variables, rows flipped so b >= 0.
  detail::Tableau<Scalar> phase1;
  phase1.t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  phase1.basis.resize(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) phase1.t(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
    phase1.t(i, n + i) = 1;
    phase1.t(i, n + m) = flip ? Scalar(-b(i)) : b(i);
    phase1.basis[static_cast<std::size_t>(i)] = n + i;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar s{};
    for (Eigen::Index i = 0; i < m; ++i) s += phase1.t(i, j);
    phase1.t(m, j) = -s;
  }
  {
    Scalar s{};
    for (Eigen::Index i = 0; i < m; ++i) s += phase1.t(i, n + m);
    phase1.t(m, n + m) = -s;
  }
  phase1.run(n);
  if (phase1.t(m, n + m) != 0) {
    result.status = Status::infeasible;
    return result;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // linearly dependent on the others and are dropped.
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (phase1.basis[static_cast<std::size_t>(i)] >= n) {
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (phase1.t(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) continue;
      phase1.pivot(i, col);
    }
    kept.push_back(i);
  }

  const auto r = static_cast<Eigen::Index>(kept.size());
  detail::Tableau<Scalar> phase2;
  phase2.t = Matrix<Scalar>::Zero(r + 1, n + 1);
  phase2.basis.resize(kept.size());
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::Index i = kept[static_cast<std::size_t>(k)];
    phase2.t.row(k).head(n) = phase1.t.row(i).head(n);
    phase2.t(k, n) = phase1.t(i, n + m);
    phase2.basis[static_cast<std::size_t>(k)] = phase1.basis[static_cast<std::size_t>(i)];
  }
  for (Eigen::Index j = 0; j <= n; ++j) {
    Scalar z{};
    for (Eigen::Index k = 0; k < r; ++k) z += c(phase2.basis[static_cast<std::size_t>(k)]) * phase2.t(k, j);
    phase2.t(r, j) = (j < n ? c(j) : Scalar(0)) - z;
  }
  if (!phase2.run(n)) {
    result.status = Status::unbounded;
    return result;
  }

  result.status = Status::optimal;
  result.value = -phase2.t(r, n);
  result.solution = Vector<Scalar>::Zero(n);
  for (Eigen::Index k = 0; k < r; ++k) result.solution(phase2.basis[static_cast<std::size_t>(k)]) = phase2.t(k, n);
  return result;
}

/// True iff some y >= 0 satisfies A y = b.
template <typename Scalar>
bool has_nonnegative_solution(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  if (A.cols() == 0) return b.isZero();
  return minimize_standard<Scalar>(A, b, Vector<Scalar>::Zero(A.cols())).status != Status::infeasible;
}

/// Minimizes <c, x> over {x : G x >= h} with x unrestricted in sign.
template <typename Scalar>
Result<Scalar> minimize_over_polyhedron(const Matrix<Scalar>& G, const Vector<Scalar>& h, const Vector<Scalar>& c) {
  const Eigen::Index m = G.rows();
  const Eigen::Index d = G.cols();
  // x = u - v, G u - G v - s = h with u, v, s >= 0.
  Matrix<Scalar> A(m, 2 * d + m);
  A.leftCols(d) = G;
  A.middleCols(d, d) = -G;
  A.rightCols(m) = -Matrix<Scalar>::Identity(m, m);
  Vector<Scalar> cost = Vector<Scalar>::Zero(2 * d + m);
  cost.head(d) = c;
  cost.segment(d, d) = -c;
  Result<Scalar> standard = minimize_standard<Scalar>(A, h, cost);
  Result<Scalar> result;
  result.status = standard.status;
  if (standard.status == Status::optimal) {
    result.value = standard.value;
    result.solution = standard.solution.head(d) - standard.solution.segment(d, d);
  }
  return result;
}

/// Row echelon form by exact elimination. Returns the rank and, through
/// `determinant_out` when the matrix is square, its determinant.
template <typename Scalar>
Eigen::Index eliminate(Matrix<Scalar> m, Scalar* determinant_out = nullptr) {
  Eigen::Index rank = 0;
  Scalar det = 1;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      m.row(pivot).swap(m.row(rank));
      det = -det;
    }
    const Scalar p = m(rank, col);
    det *= p;
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Scalar f = m(i, col) / p;
      m.row(i) -= f * m.row(rank);
    }
    ++rank;
  }
  if (determinant_out) *determinant_out = (m.rows() == m.cols() && rank == m.rows()) ? det : Scalar(0);
  return rank;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  return eliminate<Scalar>(m);
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  Scalar det{};
  eliminate<Scalar>(m, &det);
  return det;
}

/// Unique solution of the square system M x = b, or nullopt when M is singular.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_square(Matrix<Scalar> M, Vector<Scalar> b) {
  const Eigen::Index n = M.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (M(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      M.row(pivot).swap(M.row(col));
      std::swap(b(pivot), b(col));
    }
    const Scalar p = M(col, col);
    M.row(col) /= p;
    b(col) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || M(i, col) == 0) continue;
      const Scalar f = M(i, col);
      M.row(i) -= f * M.row(col);
      b(i) -= f * b(col);
    }
  }
  return b;
}

}  // namespace sposet::lp
