#pragma once

#include <Eigen/Dense>
#include <string>

#include "whlab/config.hpp"
#include "whlab/grid.hpp"
#include "whlab/polynomial.hpp"

namespace whlab {

using Mat = Eigen::MatrixXcd;

/// Dense discretization of an operator between two uniformly weighted
/// grid spaces: <u, v> = w * sum conj(u_i) v_i. The adjoint is the
/// conjugate transpose rescaled by the weight ratio.
struct OperatorMatrix {
  Mat a;
  double w_row = 1.0;
  double w_col = 1.0;
  std::string row_axis;
  std::string col_axis;
  double wrap_energy = 0.0;
  Warnings warnings;

  OperatorMatrix adjoint() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix scaled(cplx s) const;
  static OperatorMatrix identity(int n, double w, const std::string& axis);

  double fro_norm() const;  // weighted Frobenius norm
};

double rel_fro_diff(const OperatorMatrix& x, const OperatorMatrix& y);

/// Eigenvalues of a Hermitian operator matrix (square, equal weights).
Eigen::VectorXd hermitian_eigenvalues(const OperatorMatrix& m);

/// Partial isometry + nonnegative factor from the (weighted) SVD of A:
/// A = T |A| with T*T the projection onto ran|A|; singular values below
/// rank_tol * sigma_max define the kernel.
struct PolarFactors {
  OperatorMatrix T;
  OperatorMatrix absA;
  Eigen::VectorXd singular_values;
  int rank = 0;
  double rank_tol = 0.0;
  double cc_star_residual = 0.0;  // || AA* - T A*A T* || / || AA* ||
  Warnings warnings;
};
PolarFactors polar_isometry(const OperatorMatrix& A, double rank_tol = 1e-8);

}  // namespace whlab
