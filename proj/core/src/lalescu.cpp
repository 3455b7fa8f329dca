#include "whlab/lalescu.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "whlab/quadrature.hpp"

namespace whlab::lalescu {

namespace {

const double kPi = std::acos(-1.0);

double sqr(double v) { return v * v; }

// tau <-> s change of variable, s = 2/(1+tau^2)
double tau_of(double s) { return std::sqrt(2.0 / s - 1.0); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

EigenParams EigenParams::make(double s) {
  if (!(s > 0.0 && s < 2.0))
    throw std::domain_error("eigenfunction parameter s must lie in (0, 2)");
  EigenParams p;
  p.s = s;
  p.tau = tau_of(s);
  p.norm = 1.0 / std::sqrt(4.0 * kPi * s * p.tau);
  return p;
}

double eigfun_q(double s, double x) {
  const EigenParams p = EigenParams::make(s);
  return 2.0 * p.norm * (p.tau * std::cos(p.tau * x) + std::sin(p.tau * x));
}

double eigen_residual(double s, double x) {
  const EigenParams p = EigenParams::make(s);
  const cplx i{0.0, 1.0};
  // I(w) = int_0^inf e^{-|x-y|} e^{i w y} dy, elementary antiderivatives
  auto kernel_int = [&](double w) {
    const cplx iw{0.0, w};
    const cplx eiwx = std::exp(iw * x);
    return (eiwx - std::exp(-x)) / (1.0 + iw) + eiwx / (1.0 - iw);
  };
  const cplx integral = p.norm * ((p.tau - i) * kernel_int(p.tau) +
                                  (p.tau + i) * kernel_int(-p.tau));
  return std::abs(s * eigfun_q(s, x) - integral);
}

double laguerre_l(int n, double x) {
  if (n < 0 || n > 200)
    throw std::domain_error("laguerre_l: n out of the supported range [0, 200]");
  double lm1 = 0.0, l = 1.0;  // L_0
  for (int k = 0; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return std::exp(-0.5 * x) * l;
}

cplx gamma_phase(double x) {
  // (-1+2ix)/(1+2ix) = ((4x^2-1) + 4ix)/(1+4x^2), exactly unimodular
  const double theta = std::atan2(4.0 * x, 4.0 * x * x - 1.0);
  return std::polar(1.0, theta);
}

double lambda_fn(int n, double x) {
  if (n < 0 || n > 200)
    throw std::domain_error("lambda_fn: n out of the supported range [0, 200]");
  const double theta = std::atan2(4.0 * x, 4.0 * x * x - 1.0);
  const cplx a = cplx{x, 1.0} / cplx{1.0, 2.0 * x};  // (x+i)/(1+2ix)
  const cplx term = a * std::polar(1.0, n * theta);
  return std::sqrt(2.0 / kPi) / std::sqrt(1.0 + x * x) * 2.0 * term.real();
}

double moment_zero_check(int k) {
  if (std::abs(k) > 50)
    throw std::domain_error("moment_zero_check: |k| <= 50 required");
  auto integrand = [&](double x) -> cplx {
    const cplx a = cplx{x, 1.0} / cplx{1.0, 2.0 * x};
    const cplx a2 = k >= 0 ? a * a : std::conj(a * a);
    const double theta = std::atan2(4.0 * x, 4.0 * x * x - 1.0);
    return a2 * std::polar(1.0, k * theta) / (1.0 + x * x);
  };
  auto re = [&](double x) { return integrand(x).real(); };
  auto im = [&](double x) { return integrand(x).imag(); };
  auto tail_re = [&](double t) {
    return (integrand(1.0 / t) + integrand(-1.0 / t)).real() / (t * t);
  };
  auto tail_im = [&](double t) {
    return (integrand(1.0 / t) + integrand(-1.0 / t)).imag() / (t * t);
  };
  const double tol = 1e-12;
  cplx total{integrate_adaptive(re, -1.0, 1.0, tol),
             integrate_adaptive(im, -1.0, 1.0, tol)};
  total += cplx{integrate_adaptive(tail_re, 1e-14, 1.0, tol),
                integrate_adaptive(tail_im, 1e-14, 1.0, tol)};
  return std::abs(total);
}

Fn gamma_map(Fn h) {
  return [h = std::move(h)](double y) -> cplx {
    if (y <= 0.0) return 0.0;
    const double s = 2.0 / (1.0 + y * y);
    return 2.0 * std::sqrt(y) / (1.0 + y * y) * h(s);
  };
}

Fn gamma_map_inverse(Fn g) {
  return [g = std::move(g)](double s) -> cplx {
    if (!(s > 0.0 && s < 2.0)) return 0.0;
    const double t = tau_of(s);
    return g(t) * (1.0 + t * t) / (2.0 * std::sqrt(t));
  };
}

std::vector<cplx> u_adjoint_coeffs(const Fn& f, int count, double y_lo,
                                   double y_hi) {
  std::vector<cplx> c(count, cplx{0.0});
  // oscillation of lambda_n is bounded by n |theta'| <= 4n, so panel
  // counts scale with the top index
  const int panels_per_unit = std::max(8, 2 * count);
  if (y_hi > y_lo) {
    const int panels =
        std::max(16, static_cast<int>((y_hi - y_lo) * panels_per_unit));
    const QuadNodes& gl = gauss_legendre(16);
    const double hw = (y_hi - y_lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = y_lo + p * hw;
      for (size_t i = 0; i < gl.x.size(); ++i) {
        const double y = lo + 0.5 * hw * (gl.x[i] + 1.0);
        const cplx fv = f(y) * (0.5 * hw * gl.w[i]);
        for (int n = 0; n < count; ++n) c[n] += lambda_fn(n, y) * fv;
      }
    }
    return c;
  }
  // whole half-line: y = t/(1-t)
  const int panels = 64 * std::max(1, count / 8);
  const QuadNodes& gl = gauss_legendre(16);
  const double hw = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * hw;
    for (size_t i = 0; i < gl.x.size(); ++i) {
      const double t = lo + 0.5 * hw * (gl.x[i] + 1.0);
      if (t >= 1.0) continue;
      const double y = t / (1.0 - t);
      const double jac = 1.0 / sqr(1.0 - t);
      const cplx fv = f(y) * (0.5 * hw * gl.w[i] * jac);
      for (int n = 0; n < count; ++n) c[n] += lambda_fn(n, y) * fv;
    }
  }
  return c;
}

Fn u_apply(const std::vector<cplx>& coeffs) {
  return [coeffs](double x) -> cplx {
    cplx acc{0.0};
    for (size_t n = 0; n < coeffs.size(); ++n)
      acc += coeffs[n] * lambda_fn(static_cast<int>(n), x);
    return acc;
  };
}

Fn laguerre_series(const std::vector<cplx>& coeffs) {
  return [coeffs](double x) -> cplx {
    cplx acc{0.0};
    double lm1 = 0.0, l = 1.0;
    for (size_t n = 0; n < coeffs.size(); ++n) {
      acc += coeffs[n] * l;
      const double k = static_cast<double>(n);
      const double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
      lm1 = l;
      l = lp1;
    }
    return acc * std::exp(-0.5 * x);
  };
}

VCoeffs v_apply_coeffs(const Fn& h, double s_lo, double s_hi, int count) {
  VCoeffs out;
  const Fn gh = gamma_map(h);
  // support of Gamma h in the half-line variable
  const double y_lo = tau_of(s_hi);
  const double y_hi = tau_of(s_lo);
  out.coeffs = u_adjoint_coeffs(gh, count, y_lo, y_hi);

  const double norm2 = integrate_gl(
      [&](double s) { return std::norm(h(s)); }, s_lo, s_hi, 64);
  double captured = 0.0;
  for (const auto& c : out.coeffs) captured += std::norm(c);
  out.tail_energy_fraction =
      norm2 > 0 ? std::max(0.0, (norm2 - captured) / norm2) : 0.0;
  if (out.tail_energy_fraction > 1e-6) {
    out.warnings.push_back("coefficient tail holds more than 1e-6 of the norm");
  }
  return out;
}

std::vector<double> v_direct(const Fn& h, const std::vector<double>& xs,
                             double s_lo, double s_hi, double norm_scale) {
  const double t_lo = tau_of(s_hi);
  const double t_hi = tau_of(s_lo);
  double x_ref = 1.0;
  for (double x : xs) x_ref = std::max(x_ref, std::abs(x));
  const double panel_w = std::min(0.2, 2.0 / x_ref);
  const int panels = std::max(16, static_cast<int>((t_hi - t_lo) / panel_w) + 1);
  const QuadNodes& gl = gauss_legendre(16);
  const double hw = (t_hi - t_lo) / panels;

  // precompute amplitude a(tau) = norm(s) h(s) 4 tau / (1+tau^2)^2
  std::vector<double> taus, amps_re, amps_im, tauw;
  taus.reserve(panels * gl.x.size());
  for (int p = 0; p < panels; ++p) {
    const double lo = t_lo + p * hw;
    for (size_t i = 0; i < gl.x.size(); ++i) {
      const double t = lo + 0.5 * hw * (gl.x[i] + 1.0);
      const double s = 2.0 / (1.0 + t * t);
      const double ns = norm_scale / std::sqrt(4.0 * kPi * s * t);
      const cplx a = h(s) * (ns * 4.0 * t / sqr(1.0 + t * t) * 0.5 * hw * gl.w[i]);
      taus.push_back(t);
      amps_re.push_back(a.real());
      amps_im.push_back(a.imag());
      tauw.push_back(t);
    }
  }
  std::vector<double> out(xs.size(), 0.0);
  for (size_t j = 0; j < xs.size(); ++j) {
    const double x = xs[j];
    double acc = 0.0;
    for (size_t q = 0; q < taus.size(); ++q) {
      const double t = taus[q];
      // q(s, x) = 2 n(s) (tau cos(tau x) + sin(tau x)); n(s) already in amp
      acc += amps_re[q] * 2.0 * (t * std::cos(t * x) + std::sin(t * x));
    }
    out[j] = acc;
  }
  return out;
}

double spectral_residual_W(const Fn& h, double s_lo, double s_hi,
                           const LabGrid& g) {
  const double margin = 1e-6;
  if (s_lo <= margin || s_hi >= 2.0 - margin) {
    throw std::invalid_argument(
        "spectral_residual_W: support must stay inside (0, 2)");
  }
  const std::vector<double> xs = g.half.points();
  const std::vector<double> vh = v_direct(h, xs, s_lo, s_hi);
  const std::vector<double> vsh = v_direct(
      [&](double s) { return s * h(s); }, xs, s_lo, s_hi);

  Vec vh_vec(g.half.n), vsh_vec(g.half.n);
  for (int j = 0; j < g.half.n; ++j) {
    vh_vec[j] = vh[j];
    vsh_vec[j] = vsh[j];
  }
  const Symbol lal = Symbol::rational(Polynomial::constant(2.0),
                                      Polynomial({1.0, 0.0, 1.0}));
  const Vec wv = wh_apply(lal, g, vh_vec);
  const double dx = g.half.spacing();
  const double diff = std::sqrt((wv - vsh_vec).squaredNorm() * dx);
  const double hnorm = std::sqrt(integrate_gl(
      [&](double s) { return std::norm(h(s)); }, s_lo, s_hi, 64));
  return hnorm > 0 ? diff / hnorm : 0.0;
}

std::vector<double> cheb_Q(int n) {
  if (n < 0 || n > 200) throw std::domain_error("cheb_Q: n out of range");
  std::vector<double> qm1{1.0};            // Q_0
  if (n == 0) return qm1;
  std::vector<double> q{-1.0 / 3.0, 2.0};  // Q_1
  for (int k = 1; k < n; ++k) {
    std::vector<double> qp1(q.size() + 1, 0.0);
    for (size_t j = 0; j < q.size(); ++j) qp1[j + 1] = 2.0 * q[j];
    for (size_t j = 0; j < qm1.size(); ++j) qp1[j] -= qm1[j];
    qm1 = std::move(q);
    q = std::move(qp1);
  }
  return q;
}

double cheb_weight(double xi) {
  return 9.0 / kPi * std::sqrt(std::max(0.0, 1.0 - xi * xi)) / (5.0 - 3.0 * xi);
}

Vec w_apply(const Fn& h, const Grid& full) {
  if (full.half_line) throw std::invalid_argument("w_apply: full-line grid required");
  const Fn gh = gamma_map(h);
  Vec f(full.n);
  for (int j = 0; j < full.n; ++j) {
    const double y = full.point(j);
    if (y > 0.0)
      f[j] = gh(y);
    else if (y < 0.0)
      f[j] = -gh(-y);  // odd extension
    else
      f[j] = 0.0;
  }
  const Vec proj = 0.5 * (f + hilbert(full, f));
  Vec out(full.n);
  for (int j = 0; j < full.n; ++j) {
    const double x = full.point(j);
    const cplx u = cplx{x, 1.0} / std::sqrt(1.0 + x * x);
    out[j] = u * proj[j];
  }
  return out;
}

namespace {

Fn smooth_bump(double a, double b) {
  return [a, b](double s) -> cplx {
    const double z = (2.0 * s - (a + b)) / (b - a);
    if (std::abs(z) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - z * z));
  };
}

double grid_norm(const Vec& v, double w) { return std::sqrt(v.squaredNorm() * w); }

}  // namespace

std::vector<Check> validation_suite(const SuiteOptions& opts) {
  std::vector<Check> checks;
  auto push = [&](std::string name, std::string params, double residual,
                  double tolerance) {
    checks.push_back({std::move(name), std::move(params), residual, tolerance,
                      residual < tolerance});
  };

  // closed-form eigenfunction identity on a 21x21 grid
  {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double s = 0.1 + 1.8 * i / 20.0;
      for (int j = 0; j <= 20; ++j) {
        worst = std::max(worst, eigen_residual(s, 0.5 * j));
      }
    }
    push("eigen_residual_grid", "21x21 points, s in [0.1,1.9], x in [0,10]",
         worst, 1e-10);
  }

  // lambda_n orthonormality
  {
    const int nmax = opts.max_lambda_n;
    double worst = 0.0;
    for (int m = 0; m <= nmax; ++m) {
      for (int n = m; n <= nmax; ++n) {
        auto f = [&](double t) {
          const double y = t / (1.0 - t);
          return lambda_fn(m, y) * lambda_fn(n, y) / sqr(1.0 - t);
        };
        const double v = integrate_gl(f, 0.0, 1.0 - 1e-12, 256);
        worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
      }
    }
    push("lambda_orthonormality", "m,n <= " + fmt(nmax), worst, 1e-6);
  }

  // vanishing moments
  {
    double worst = 0.0;
    for (int k = -opts.moment_k_max; k <= opts.moment_k_max; ++k)
      worst = std::max(worst, moment_zero_check(k));
    push("moment_zero", "|k| <= " + fmt(opts.moment_k_max), worst, 1e-8);
  }

  // Laguerre function convention: orthonormality + generating function
  {
    double worst = 0.0;
    for (int m = 0; m <= 8; ++m) {
      for (int n = m; n <= 8; ++n) {
        auto f = [&](double t) {
          const double y = t / (1.0 - t);
          return laguerre_l(m, y) * laguerre_l(n, y) / sqr(1.0 - t);
        };
        const double v = integrate_gl(f, 0.0, 1.0 - 1e-12, 128);
        worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
      }
    }
    push("laguerre_orthonormality", "m,n <= 8", worst, 1e-10);

    const double q = 0.5;
    double gf_worst = 0.0;
    for (double x : {0.3, 1.0, 2.5, 6.0}) {
      double series = 0.0;
      for (int n = 0; n <= 160; ++n) series += std::pow(q, n) * laguerre_l(n, x);
      const double closed =
          std::exp(-x * (1.0 + q) / (2.0 * (1.0 - q))) / (1.0 - q);
      gf_worst = std::max(gf_worst, std::abs(series - closed));
    }
    push("laguerre_generating_function",
         "q=1/2; convention (1-q)^{-1} exp(-x(1+q)/(2(1-q)))", gf_worst, 1e-10);
  }

  // Chebyshev-combination orthonormality under the stated weight
  {
    const int nmax = opts.max_cheb_n;
    const QuadNodes cu = gauss_chebyshev_u(4 * nmax + 16);
    std::vector<std::vector<double>> qs;
    for (int n = 0; n <= nmax; ++n) qs.push_back(cheb_Q(n));
    auto eval_poly = [](const std::vector<double>& c, double x) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    double worst = 0.0;
    for (int m = 0; m <= nmax; ++m) {
      for (int n = m; n <= nmax; ++n) {
        double v = 0.0;
        for (size_t i = 0; i < cu.x.size(); ++i) {
          const double xi = cu.x[i];
          v += cu.w[i] * (9.0 / kPi / (5.0 - 3.0 * xi)) *
               eval_poly(qs[m], xi) * eval_poly(qs[n], xi);
        }
        worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
      }
    }
    push("cheb_orthonormality", "m,n <= " + fmt(nmax), worst, 1e-10);
  }

  // direct eigenfunction transform vs the U* Gamma route
  {
    const std::vector<std::pair<Fn, std::string>> tests = {
        {smooth_bump(0.5, 1.5), "bump[0.5,1.5]"},
        {smooth_bump(0.3, 1.0), "bump[0.3,1.0]"},
        {smooth_bump(1.0, 1.8), "bump[1.0,1.8]"},
        {[](double s) -> cplx {
           const cplx b = smooth_bump(0.4, 1.6)(s);
           return b * std::sin(3.0 * s);
         },
         "bump*sin(3s)"},
        {[](double s) -> cplx {
           const cplx b = smooth_bump(0.6, 1.2)(s);
           return b * s * s;
         },
         "bump*s^2"},
    };
    std::vector<double> xs;
    for (int j = 0; j < 400; ++j) xs.push_back(0.05 * j);
    double worst = 0.0;
    for (const auto& [h, name] : tests) {
      double lo = 2.0, hi = 0.0;  // support bounds
      for (double s = 0.0; s <= 2.0; s += 1e-3) {
        if (std::abs(h(s)) > 0) {
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
      }
      lo = std::max(1e-3, lo - 1e-3);
      hi = std::min(2.0 - 1e-3, hi + 1e-3);
      const auto direct = v_direct(h, xs, lo, hi, opts.norm_perturbation);
      const auto vc = v_apply_coeffs(h, lo, hi);
      const Fn series = laguerre_series(vc.coeffs);
      double num = 0.0, den = 0.0;
      for (size_t j = 0; j < xs.size(); ++j) {
        num += sqr(direct[j] - series(xs[j]).real());
        den += sqr(direct[j]);
      }
      const double rel = den > 0 ? std::sqrt(num / den) : 0.0;
      worst = std::max(worst, rel);
      push("v_direct_vs_v_apply[" + name + "]", name, rel, 1e-4);
    }
    (void)worst;
  }

  // spectral commutation residual with measured convergence
  {
    const Fn h = smooth_bump(0.5, 1.5);
    const LabGrid g1 = LabGrid::make(opts.spectral_x_max, opts.spectral_n);
    const LabGrid g2 = LabGrid::make(opts.spectral_x_max, 2 * opts.spectral_n);
    const double r1 = spectral_residual_W(h, 0.5, 1.5, g1);
    const double r2 = spectral_residual_W(h, 0.5, 1.5, g2);
    push("spectral_residual", "n = " + fmt(opts.spectral_n), r1, 1e-3);
    const double ratio = r2 > 0 ? r1 / r2 : 1e9;
    checks.push_back({"spectral_residual_convergence",
                      "ratio n -> 2n (want >= 1.4)", ratio, 1.4, ratio >= 1.4});
  }

  // W isometry plus range/kernel geometry
  {
    const Grid full = Grid::full(opts.w_x_max, opts.w_n);
    const double dx = full.spacing();
    const double tol = identity_tol(opts.w_n);
    const Fn h = smooth_bump(0.5, 1.5);
    const Vec wh = w_apply(h, full);
    const double hnorm = std::sqrt(integrate_gl(
        [&](double s) { return std::norm(h(s)); }, 0.5, 1.5, 64));
    const double iso = std::abs(grid_norm(wh, dx) - hnorm) / hnorm;
    push("w_isometry", "|  ||Wh|| - ||h||  | / ||h||", iso, tol);

    Vec u_inv_wh(full.n);
    for (int j = 0; j < full.n; ++j) {
      const double x = full.point(j);
      const cplx u = cplx{x, 1.0} / std::sqrt(1.0 + x * x);
      u_inv_wh[j] = wh[j] / u;
    }
    push("w_range_in_uH+", "negative-frequency fraction of u^{-1} W h",
         negative_frequency_fraction(full, u_inv_wh), 1e-12);

    // kernel element u/(x-i) of the singular operator
    const LabGrid g = LabGrid::make(opts.w_x_max, opts.w_n / 2);
    const Symbol lal = Symbol::rational(Polynomial::constant(2.0),
                                        Polynomial({1.0, 0.0, 1.0}));
    const OperatorMatrix L = singular_matrix(lal, g);
    Vec ker(L.a.cols());
    for (int c = 0; c < L.a.cols(); ++c) {
      const double x = g.dual.point(c);  // E is the whole dual grid here
      const cplx u = cplx{x, 1.0} / std::sqrt(1.0 + x * x);
      ker[c] = u / cplx{x, -1.0};
    }
    const Vec lk = L.a * ker;
    const double rel = std::sqrt(lk.squaredNorm() / ker.squaredNorm());
    push("w_kernel_annihilated", "||L (u/(x-i))|| / ||u/(x-i)||", rel, tol);
  }

  // normalization sensitivity: scaling the transform kernel must move the
  // direct-vs-coefficients agreement by the same relative amount
  if (opts.norm_perturbation == 1.0) {
    const Fn h = smooth_bump(0.5, 1.5);
    std::vector<double> xs;
    for (int j = 0; j < 300; ++j) xs.push_back(0.05 * j);
    const auto vc = v_apply_coeffs(h, 0.5, 1.5);
    const Fn series = laguerre_series(vc.coeffs);
    const auto scaled = v_direct(h, xs, 0.5, 1.5, 1.1);
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < xs.size(); ++j) {
      num += sqr(scaled[j] - series(xs[j]).real());
      den += sqr(series(xs[j]).real());
    }
    const double rel = std::sqrt(num / den);
    checks.push_back({"normalization_uniqueness",
                      "1.1-scaled kernel mismatch (want 0.1 +- 0.003)",
                      rel, 0.103, std::abs(rel - 0.1) < 3e-3});
  }

  return checks;
}

}  // namespace whlab::lalescu
