#include "whlab/halfline_ops.hpp"

#include <algorithm>
#include <cmath>

#include "whlab/essential_range.hpp"

namespace whlab {

namespace {

const double kPi = std::acos(-1.0);

// dual-domain multiplier applied between the forward/inverse transforms
Vec multiplier_on_full(const Grid& full, const Vec& f,
                       const std::function<cplx(double, int)>& m) {
  const Grid dual = full.dual();
  Vec hat = fourier_forward(full, f);
  for (int k = 0; k < dual.n; ++k) hat[k] *= m(dual.point(k), k);
  return fourier_inverse(dual, hat);
}

Vec embed_half(const LabGrid& g, const Vec& f) {
  Vec out = Vec::Zero(g.full.n);
  out.segment(g.full.n / 2, g.half.n) = f;
  return out;
}

Vec restrict_half(const LabGrid& g, const Vec& f) {
  return f.segment(g.full.n / 2, g.half.n);
}

double kernel_wrap_energy(const Symbol& s, const LabGrid& g) {
  // effective convolution kernel = inverse transform of the sampled
  // multiplier; report the energy fraction living beyond |t| > x_max / 2
  Vec kappa = sample_symbol(s, g.dual);
  Vec k = fourier_inverse(g.dual, kappa);  // on g.full, up to normalization
  double far = 0.0, tot = 0.0;
  for (int j = 0; j < g.full.n; ++j) {
    const double e = std::norm(k[j]);
    tot += e;
    if (std::abs(g.full.point(j)) > g.full.x_max / 2.0) far += e;
  }
  return tot > 0 ? far / tot : 0.0;
}

}  // namespace

Vec sample_symbol(const Symbol& s, const Grid& g) {
  Vec out(g.n);
  for (int j = 0; j < g.n; ++j) {
    const PointValue v = s.eval(g.point(j));
    if (v.pole) {
      throw NumericalFailure(
          "symbol pole on the grid at x = " + std::to_string(g.point(j)) +
          "; shift x_max or n to move the grid");
    }
    if (!std::isfinite(std::abs(v.value))) {
      throw NumericalFailure(
          "symbol not finite on the grid at x = " + std::to_string(g.point(j)));
    }
    out[j] = v.value;
  }
  return out;
}

Vec hilbert(const Grid& g, const Vec& f) {
  return multiplier_on_full(g, f, [](double xi, int) {
    return cplx{xi > 0 ? 1.0 : (xi < 0 ? -1.0 : 0.0)};
  });
}

Vec hardy_project(const Grid& g, const Vec& f) {
  return multiplier_on_full(g, f, [](double xi, int) {
    return cplx{xi > 0 ? 1.0 : 0.0};
  });
}

double negative_frequency_fraction(const Grid& g, const Vec& f) {
  const Grid dual = g.dual();
  const Vec hat = fourier_forward(g, f);
  double neg = 0.0, tot = 0.0;
  for (int k = 0; k < dual.n; ++k) {
    const double e = std::norm(hat[k]);
    tot += e;
    if (dual.point(k) < 0) neg += e;
  }
  return tot > 0 ? neg / tot : 0.0;
}

std::optional<KernelFn> closed_form_kernel(const Symbol& s) {
  switch (s.kind()) {
    case Symbol::Kind::Rational: {
      // c / (1 + x^2) -> (c/2) e^{-|t|}
      const Polynomial& p = s.num();
      const Polynomial& q = s.den();
      if (p.degree() == 0 && q.degree() == 2 &&
          q.monic().almost_equal(Polynomial({1.0, 0.0, 1.0}))) {
        const cplx c = p.leading() / q.leading();
        return KernelFn([c](double t) { return 0.5 * c * std::exp(-std::abs(t)); });
      }
      return std::nullopt;
    }
    case Symbol::Kind::Indicator: {
      const auto ivs = s.intervals();
      for (const auto& iv : ivs)
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) return std::nullopt;
      return KernelFn([ivs](double t) {
        cplx acc{0.0};
        for (const auto& iv : ivs) {
          if (t == 0.0) {
            acc += iv.hi - iv.lo;
          } else {
            const cplx it{0.0, t};
            acc += (std::exp(-it * iv.lo) - std::exp(-it * iv.hi)) / it;
          }
        }
        return acc / (2.0 * kPi);
      });
    }
    case Symbol::Kind::Scaled: {
      auto base = closed_form_kernel(s.children()[0]);
      if (!base) return std::nullopt;
      const cplx c = s.scale_factor();
      return KernelFn([c, base = *base](double t) { return c * base(t); });
    }
    case Symbol::Kind::Sum: {
      auto ka = closed_form_kernel(s.children()[0]);
      auto kb = closed_form_kernel(s.children()[1]);
      if (!ka || !kb) return std::nullopt;
      return KernelFn([ka = *ka, kb = *kb](double t) { return ka(t) + kb(t); });
    }
    default:
      return std::nullopt;
  }
}

cplx minus_tanh_kernel(double t) {
  if (t == 0.0) return cplx{0.0};
  return cplx{0.0, 1.0} / (2.0 * std::sinh(kPi * t / 2.0));
}

OperatorMatrix wh_matrix(const Symbol& s, const LabGrid& g, WhRoute route) {
  if (route == WhRoute::Kernel) {
    auto k = closed_form_kernel(s);
    if (!k) {
      throw std::invalid_argument(
          "wh_matrix: no closed-form kernel for symbol " + s.describe());
    }
    return wh_matrix_from_kernel(*k, g);
  }
  const Vec kappa = sample_symbol(s, g.dual);
  const int n = g.half.n;
  OperatorMatrix out;
  out.a.resize(n, n);
  out.w_row = out.w_col = g.half.spacing();
  out.row_axis = out.col_axis = "halfline";
  Vec e = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    Vec full = embed_half(g, e);
    Vec hat = fourier_inverse(g.full, full);  // position -> symbol domain
    hat.array() *= kappa.array();
    Vec back = fourier_forward(g.dual, hat);  // symbol domain -> position
    out.a.col(j) = restrict_half(g, back);
    e[j] = 0.0;
  }
  out.wrap_energy = kernel_wrap_energy(s, g);
  return out;
}

OperatorMatrix wh_matrix_from_kernel(const KernelFn& k, const LabGrid& g) {
  const int n = g.half.n;
  const double dx = g.half.spacing();
  OperatorMatrix out;
  out.a.resize(n, n);
  out.w_row = out.w_col = dx;
  out.row_axis = out.col_axis = "halfline";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.a(i, j) = k((i - j) * dx) * dx;
    }
  }
  return out;
}

Vec wh_apply(const Symbol& s, const LabGrid& g, const Vec& f) {
  const Vec kappa = sample_symbol(s, g.dual);
  Vec full = embed_half(g, f);
  Vec hat = fourier_inverse(g.full, full);
  hat.array() *= kappa.array();
  return restrict_half(g, fourier_forward(g.dual, hat));
}

FactorPair a_matrix(const Symbol& s, const LabGrid& g) {
  const Vec kappa = sample_symbol(s, g.dual);
  FactorPair out;
  for (int k = 0; k < g.dual.n; ++k) {
    const double v = kappa[k].real();
    if (kappa[k].real() < -1e-12 ||
        std::abs(kappa[k].imag()) > 1e-12 * (1.0 + std::abs(v))) {
      throw std::invalid_argument(
          "a_matrix: symbol must be nonnegative on the dual grid");
    }
    if (v > 0.0) out.e_index.push_back(k);
  }
  const int ne = static_cast<int>(out.e_index.size());
  const int nh = g.half.n;
  out.A.a.resize(nh, ne);
  out.A.w_row = g.half.spacing();
  out.A.w_col = g.dual.spacing();
  out.A.row_axis = "halfline";
  out.A.col_axis = "E";
  for (int c = 0; c < ne; ++c) {
    Vec full = Vec::Zero(g.dual.n);
    full[out.e_index[c]] = std::sqrt(std::max(0.0, kappa[out.e_index[c]].real()));
    Vec pos = fourier_forward(g.dual, full);  // symbol domain -> position
    out.A.a.col(c) = restrict_half(g, pos);
  }
  out.Astar = out.A.adjoint();
  return out;
}

OperatorMatrix hilbert_trace(const Symbol& s, const LabGrid& g) {
  const Vec kappa = sample_symbol(s, g.dual);
  std::vector<int> e_index;
  for (int k = 0; k < g.dual.n; ++k)
    if (kappa[k].real() > 0.0) e_index.push_back(k);
  const int ne = static_cast<int>(e_index.size());
  OperatorMatrix out;
  out.a.resize(ne, ne);
  out.w_row = out.w_col = g.dual.spacing();
  out.row_axis = out.col_axis = "E";
  for (int c = 0; c < ne; ++c) {
    Vec full = Vec::Zero(g.dual.n);
    full[e_index[c]] = 1.0;
    Vec h = hilbert(g.dual, full);
    for (int r = 0; r < ne; ++r) out.a(r, c) = h[e_index[r]];
  }
  return out;
}

OperatorMatrix singular_matrix(const Symbol& s, const LabGrid& g) {
  const Vec kappa = sample_symbol(s, g.dual);
  std::vector<int> e_index;
  for (int k = 0; k < g.dual.n; ++k)
    if (kappa[k].real() > 0.0) e_index.push_back(k);
  const int ne = static_cast<int>(e_index.size());

  OperatorMatrix out;
  out.a.resize(ne, ne);
  out.w_row = out.w_col = g.dual.spacing();
  out.row_axis = out.col_axis = "E";
  // L = (1/2) M(phi) + (1/2) M(sqrt(phi)) H_E M(sqrt(phi))
  for (int c = 0; c < ne; ++c) {
    const double phi_c = kappa[e_index[c]].real();
    Vec full = Vec::Zero(g.dual.n);
    full[e_index[c]] = std::sqrt(phi_c);
    Vec h = hilbert(g.dual, full);
    for (int r = 0; r < ne; ++r) {
      const double phi_r = kappa[e_index[r]].real();
      cplx v = 0.5 * std::sqrt(phi_r) * h[e_index[r]];
      if (r == c) v += 0.5 * phi_c;
      out.a(r, c) = v;
    }
  }
  return out;
}

FriedrichsShift friedrichs_shift(const Symbol& s) {
  if (!s.certified_real())
    throw std::invalid_argument("friedrichs_shift: real symbols only");
  const RealRange r = real_symbol_range(s);
  if (!r.bounded_below && !r.bounded_above)
    throw std::invalid_argument("friedrichs_shift: symbol unbounded on both sides");
  double eta, alpha;
  if (r.bounded_below && r.inf >= 0.0) {
    eta = 1.0;
    alpha = 0.0;
  } else if (r.bounded_above && r.sup <= 0.0) {
    eta = -1.0;
    alpha = 0.0;
  } else if (r.bounded_below) {
    eta = 1.0;
    alpha = -r.inf;
  } else {
    eta = -1.0;
    alpha = r.sup;
  }
  Symbol shifted = (alpha == 0.0 && eta == 1.0)
                       ? s
                       : Symbol::sum(Symbol::constant(alpha),
                                     Symbol::scaled(eta, s));
  return FriedrichsShift{eta, alpha, std::move(shifted)};
}

double shift_invariance_residual(const Symbol& s, double b, const LabGrid& g) {
  const double dx = g.half.spacing();
  const double steps = b / dx;
  const int m = static_cast<int>(std::lround(steps));
  if (std::abs(steps - m) > 1e-9 || m < 0) {
    throw std::invalid_argument(
        "shift_invariance_residual: b must be a nonnegative grid multiple");
  }
  if (m == 0) return 0.0;
  const OperatorMatrix w = wh_matrix(s, g);
  const int n = g.half.n;
  // (S_b^* W S_b)(i, j) = W(i + m, j + m)
  Mat shifted = Mat::Zero(n, n);
  shifted.topLeftCorner(n - m, n - m) = w.a.bottomRightCorner(n - m, n - m);
  const double denom = w.a.norm();
  return denom > 0 ? (shifted - w.a).norm() / denom : 0.0;
}

SingularReduction general_singular_reduce(const std::vector<double>& xs,
                                          const std::vector<double>& a,
                                          const std::vector<cplx>& b) {
  if (xs.size() != a.size() || xs.size() != b.size())
    throw std::invalid_argument("general_singular_reduce: length mismatch");
  std::vector<cplx> phi(xs.size()), alpha(xs.size());
  SingularReduction out{Symbol::constant(0.0), Symbol::constant(0.0), {}};
  out.phase_u.resize(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    const double m = std::abs(b[i]);
    if (m == 0.0)
      throw std::invalid_argument("general_singular_reduce: b vanishes on the grid");
    phi[i] = 2.0 * m * m;
    alpha[i] = a[i] - m * m;
    out.phase_u[i] = std::conj(b[i]) / m;
  }
  out.phi = Symbol::tabulated(xs, phi);
  out.alpha = Symbol::tabulated(xs, alpha);
  return out;
}

bool symbol_unbounded(const Symbol& s) {
  switch (s.kind()) {
    case Symbol::Kind::Rational:
      return s.num().degree() > s.den().degree() ||
             !half_plane_split(s.den()).real.empty();
    case Symbol::Kind::Indicator:
      return false;
    case Symbol::Kind::ExpPower:
      return s.exp_c() > 0.0;
    case Symbol::Kind::Tabulated:
      return false;
    default: {
      for (const auto& c : s.children())
        if (symbol_unbounded(c)) return true;
      return false;
    }
  }
}

}  // namespace whlab
