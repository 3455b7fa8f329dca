#pragma once

#include <functional>

#include "whlab/halfline_ops.hpp"

namespace whlab::lalescu {

using Fn = std::function<cplx(double)>;

/// Spectral parameter bundle for the exponential-kernel operator on the
/// half-line: tau = sqrt(2/s - 1), norm = (4 pi s tau)^{-1/2}.
struct EigenParams {
  double s = 0.0;
  double tau = 0.0;
  double norm = 0.0;
  static EigenParams make(double s);  // throws outside (0, 2)
};

/// Generalized eigenfunction q_s(x) = norm ((tau-i) e^{i tau x} +
/// (tau+i) e^{-i tau x}); real-valued.
double eigfun_q(double s, double x);

/// | s q_s(x) - int_0^inf e^{-|x-y|} q_s(y) dy | with the integral in
/// closed form (elementary antiderivatives).
double eigen_residual(double s, double x);

/// Laguerre function e^{-x/2} L_n(x) by the three-term recurrence;
/// orthonormal on the half-line. Generating function
/// sum q^n l_n(x) = (1-q)^{-1} exp(-x (1+q) / (2 (1-q))). n <= 200.
double laguerre_l(int n, double x);

/// Unimodular Moebius value gamma(x) = (-1+2ix)/(1+2ix).
cplx gamma_phase(double x);

/// Image of l_n under the diagonalizing kernel transform, in closed form:
/// sqrt(2/pi) (1+x^2)^{-1/2} ((x+i)/(1+2ix) gamma^n + conj). n <= 200.
double lambda_fn(int n, double x);

/// Vanishing moment family behind the lambda_n orthonormality:
/// |int (1+x^2)^{-1} ((x+i)/(1+2ix))^2 gamma^k dx| for k >= 0, and the
/// conjugate family for k < 0 (which is the one the cross terms use).
/// |k| <= 50.
double moment_zero_check(int k);

/// Unitary change of variable L^2(0,2) -> L^2(R_+),
/// (Gh)(y) = 2 sqrt(y)/(1+y^2) h(2/(1+y^2)).
Fn gamma_map(Fn h);
Fn gamma_map_inverse(Fn g);

/// Coefficients <lambda_n, f> for n < count; quadrature over [y_lo, y_hi]
/// (pass y_hi <= y_lo for the whole half-line).
std::vector<cplx> u_adjoint_coeffs(const Fn& f, int count, double y_lo = 0.0,
                                   double y_hi = -1.0);

/// sum g_n lambda_n as a callable.
Fn u_apply(const std::vector<cplx>& coeffs);

/// sum c_n l_n as a callable (Laguerre series).
Fn laguerre_series(const std::vector<cplx>& coeffs);

struct VCoeffs {
  std::vector<cplx> coeffs;       // Laguerre coefficients of V h
  double tail_energy_fraction = 0.0;
  Warnings warnings;
};
/// V = U* Gamma: Laguerre-coefficient route, for h supported in
/// [s_lo, s_hi] inside (0, 2).
VCoeffs v_apply_coeffs(const Fn& h, double s_lo, double s_hi, int count = 72);

/// Direct quadrature of the eigenfunction-kernel transform
/// (V h)(x) = int q(s, x) h(s) ds over [s_lo, s_hi]; norm_scale rescales
/// the normalization constant (sensitivity experiments).
std::vector<double> v_direct(const Fn& h, const std::vector<double>& xs,
                             double s_lo, double s_hi,
                             double norm_scale = 1.0);

/// || W_lalescu (V h) - V (id h) || / || h || on the half-line grid;
/// the support [s_lo, s_hi] must avoid 0 and 2.
double spectral_residual_W(const Fn& h, double s_lo, double s_hi,
                           const LabGrid& g);

/// Monomial coefficients of Q_n: Q_0 = 1, Q_1 = 2 xi - 1/3,
/// Q_{n+1} = 2 xi Q_n - Q_{n-1}. n <= 200.
std::vector<double> cheb_Q(int n);
/// Orthonormality weight (9/pi) sqrt(1-xi^2) / (5 - 3 xi).
double cheb_weight(double xi);

/// Isometry W h = M(u) (1/2)(I+H) (Gamma h)_oe on a full-line grid,
/// u(x) = (x+i)/sqrt(1+x^2).
Vec w_apply(const Fn& h, const Grid& full);

struct Check {
  std::string name;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  int max_lambda_n = 15;
  int max_cheb_n = 20;
  int moment_k_max = 10;
  double norm_perturbation = 1.0;  // scales n(s) in the direct transform
  int spectral_n = 4096;
  double spectral_x_max = 64.0;
  int w_n = 2048;
  double w_x_max = 128.0;
  unsigned seed = 42;
};

/// Runs every validation check of this module; all tolerances pinned.
std::vector<Check> validation_suite(const SuiteOptions& opts);

}  // namespace whlab::lalescu
