#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace secest {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Tolerances shared by every rank / least-squares decision in the library.
///
/// rank_rel_tol is a relative singular-value cutoff: sigma_i counts toward the
/// rank iff sigma_i > rank_rel_tol * sigma_max. The residual fields define the
/// feasibility threshold of the consistency check, eps = max(residual_abs_floor,
/// residual_rel_factor * |rhs|).
struct TolerancePolicy {
  double rank_rel_tol = 1e-9;
  double residual_abs_floor = 1e-7;
  double residual_rel_factor = 1e-8;

  void validate() const;
  double epsilon_for(double rhs_norm) const;
};

struct LstsqResult {
  Vector solution;
  double residual_norm = 0.0;
};

/// Numerical rank from singular values (0 for an all-zero matrix).
int rank(const Matrix& m, const TolerancePolicy& pol = {});

/// Minimum-norm least-squares solution of min_z |v - m z| and the achieved
/// residual. Deterministic for fixed inputs.
LstsqResult lstsq_min_norm(const Matrix& m, const Vector& v,
                           const TolerancePolicy& pol = {});

/// Matrix exponential (scaling-and-squaring, Pade core).
Matrix matrix_exp(const Matrix& m);

/// Orthogonal projection of v onto the column space of basis, with the
/// policy's rank cutoff deciding which directions count.
Vector project_onto_colspace(const Matrix& basis, const Vector& v,
                             const TolerancePolicy& pol = {});

namespace detail {
void require_finite(const Matrix& m, const char* what);
void require_finite(const Vector& v, const char* what);
}  // namespace detail

}  // namespace secest
