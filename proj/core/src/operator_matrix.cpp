#include "whlab/operator_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace whlab {

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out;
  out.a = a.adjoint() * (w_row / w_col);
  out.w_row = w_col;
  out.w_col = w_row;
  out.row_axis = col_axis;
  out.col_axis = row_axis;
  return out;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (a.cols() != rhs.a.rows())
    throw std::invalid_argument("operator product: shape mismatch");
  OperatorMatrix out;
  out.a = a * rhs.a;
  out.w_row = w_row;
  out.w_col = rhs.w_col;
  out.row_axis = row_axis;
  out.col_axis = rhs.col_axis;
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  OperatorMatrix out = *this;
  out.a -= rhs.a;
  return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  OperatorMatrix out = *this;
  out.a += rhs.a;
  return out;
}

OperatorMatrix OperatorMatrix::scaled(cplx s) const {
  OperatorMatrix out = *this;
  out.a *= s;
  return out;
}

OperatorMatrix OperatorMatrix::identity(int n, double w, const std::string& axis) {
  OperatorMatrix out;
  out.a = Mat::Identity(n, n);
  out.w_row = out.w_col = w;
  out.row_axis = out.col_axis = axis;
  return out;
}

double OperatorMatrix::fro_norm() const {
  return a.norm() * std::sqrt(w_row * w_col);
}

double rel_fro_diff(const OperatorMatrix& x, const OperatorMatrix& y) {
  const double denom = std::max(x.fro_norm(), y.fro_norm());
  if (denom == 0.0) return 0.0;
  return (x - y).fro_norm() / denom;
}

Eigen::VectorXd hermitian_eigenvalues(const OperatorMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m.a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PolarFactors polar_isometry(const OperatorMatrix& A, double rank_tol) {
  // Rescale to plain l2 so the SVD factors are orthonormal in the
  // weighted inner products.
  const double sr = std::sqrt(A.w_row), sc = std::sqrt(A.w_col);
  const Mat tilde = (sr / sc) * A.a;

  Mat U, V;
  Eigen::VectorXd S;
  if (std::max(tilde.rows(), tilde.cols()) > 96) {
    Eigen::BDCSVD<Mat> svd(tilde, Eigen::ComputeThinU | Eigen::ComputeThinV);
    U = svd.matrixU();
    V = svd.matrixV();
    S = svd.singularValues();
  } else {
    Eigen::JacobiSVD<Mat> svd(tilde, Eigen::ComputeThinU | Eigen::ComputeThinV);
    U = svd.matrixU();
    V = svd.matrixV();
    S = svd.singularValues();
  }

  PolarFactors out;
  out.singular_values = S;
  out.rank_tol = rank_tol;
  const double smax = S.size() ? S(0) : 0.0;
  const double cut = rank_tol * smax;
  int r = 0;
  for (int i = 0; i < S.size(); ++i)
    if (S(i) > cut) ++r;
  out.rank = r;
  for (int i = 0; i < S.size(); ++i) {
    if (S(i) > cut / 3.0 && S(i) < cut * 3.0) {
      out.warnings.push_back("singular values straddle the rank_tol cutoff");
      break;
    }
  }

  out.T.a = (sc / sr) * (U.leftCols(r) * V.leftCols(r).adjoint());
  out.T.w_row = A.w_row;
  out.T.w_col = A.w_col;
  out.T.row_axis = A.row_axis;
  out.T.col_axis = A.col_axis;

  out.absA.a = V * S.asDiagonal() * V.adjoint();
  out.absA.w_row = out.absA.w_col = A.w_col;
  out.absA.row_axis = out.absA.col_axis = A.col_axis;

  const Mat aa_star = (A * A.adjoint()).a;
  const Mat conjugated = out.T.a * (A.adjoint() * A).a * out.T.adjoint().a;
  const double denom = aa_star.norm();
  out.cc_star_residual = denom > 0 ? (aa_star - conjugated).norm() / denom : 0.0;
  return out;
}

}  // namespace whlab
