#pragma once

#include <functional>
#include <vector>

namespace whlab {

struct QuadNodes {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch).
const QuadNodes& gauss_legendre(int n);

/// Gauss-Chebyshev (second kind) rule: sum w_i f(x_i) integrates
/// sqrt(1-x^2) f(x) over [-1, 1] exactly for polynomial f of degree
/// < 2n - 1.
QuadNodes gauss_chebyshev_u(int n);

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels of
/// `order` points each.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order = 16);

/// Adaptive Gauss-Kronrod over a finite interval; returns the estimate and
/// writes an error bound.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, double* err_out = nullptr,
                          int max_depth = 15);

/// Adaptive integration of f over [0, b] where f ~ x^{-sing} near 0 with
/// 0 <= sing < 1; removes the singularity by the power substitution
/// x = u^m, m >= 2/(1 - sing).
double integrate_adaptive_power0(const std::function<double(double)>& f,
                                 double b, double sing, double tol,
                                 double* err_out = nullptr);

}  // namespace whlab
