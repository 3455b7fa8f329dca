#include "whlab/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <mutex>

namespace whlab {

const QuadNodes& gauss_legendre(int n) {
  static std::map<int, QuadNodes> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    j(k, k - 1) = b;
    j(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  QuadNodes q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < n; ++i) {
    q.x[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    q.w[i] = 2.0 * v * v;
  }
  return cache.emplace(n, std::move(q)).first->second;
}

QuadNodes gauss_chebyshev_u(int n) {
  QuadNodes q;
  q.x.resize(n);
  q.w.resize(n);
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= n; ++k) {
    const double t = k * pi / (n + 1);
    q.x[k - 1] = std::cos(t);
    const double s = std::sin(t);
    q.w[k - 1] = pi / (n + 1) * s * s;
  }
  return q;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order) {
  const QuadNodes& q = gauss_legendre(order);
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (int i = 0; i < order; ++i) {
      acc += q.w[i] * f(lo + 0.5 * h * (q.x[i] + 1.0));
    }
  }
  return acc * 0.5 * h;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, double* err_out,
                          int max_depth) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, tol, &err);
  if (err_out) *err_out = err;
  return v;
}

double integrate_adaptive_power0(const std::function<double(double)>& f,
                                 double b, double sing, double tol,
                                 double* err_out) {
  if (sing <= 0.0) return integrate_adaptive(f, 0.0, b, tol, err_out);
  const double m = std::max(2.0, std::ceil(2.0 / (1.0 - sing)));
  const double ub = std::pow(b, 1.0 / m);
  auto g = [&](double u) {
    const double x = std::pow(u, m);
    return f(x) * m * std::pow(u, m - 1.0);
  };
  return integrate_adaptive(g, 0.0, ub, tol, err_out);
}

}  // namespace whlab
