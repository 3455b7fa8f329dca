#include "whlab/properness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "whlab/quadrature.hpp"

namespace whlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_weight(const Symbol& s, double x) {
  const PointValue v = s.eval(x);
  if (v.pole) return 0.0;  // log singularity, integrable; GK absorbs it
  const double a = std::abs(v.value);
  if (!std::isfinite(a)) return 0.0;
  return std::log1p(a) / (1.0 + x * x);
}

// One integration pass of ln(1+|k|)/(1+x^2) over the real line: the window
// [-1, 1] directly, the tails via x = 1/t which maps them onto (0, 1] with
// the same 1/(1+t^2) density.
double full_line_pass(const Symbol& s, double tol, double* err_acc) {
  // breakpoints inside [-1, 1] and their images in the tail variable
  std::set<double> inner{-1.0, 1.0};
  std::set<double> tail{0.0, 1.0};  // t-domain, t = 1/x
  double origin_strength = 0.0;
  double tail_strength = 0.0;

  for (const auto& bp : s.quad_breakpoints()) {
    if (std::abs(bp.x) < 1.0) {
      inner.insert(bp.x);
      if (bp.strength > 0.0 && bp.x == 0.0)
        origin_strength = std::max(origin_strength, bp.strength);
    } else if (std::isfinite(bp.x) && std::abs(bp.x) >= 1.0) {
      tail.insert(1.0 / std::abs(bp.x));
    }
  }
  // exp-power leaves drive the t -> 0 behavior of the tail integrand:
  // growth alpha in (0,1) gives a t^{-alpha} value singularity, decaying
  // alpha in (-1,0) a t^{-(1-|alpha|)} derivative kink
  std::function<void(const Symbol&)> scan = [&](const Symbol& sym) {
    if (sym.kind() == Symbol::Kind::ExpPower) {
      const double alpha = sym.exp_alpha();
      if (alpha > 0.0 && alpha < 1.0)
        tail_strength = std::max(tail_strength, alpha);
      else if (alpha < 0.0 && alpha > -1.0)
        tail_strength = std::max(tail_strength, 1.0 + alpha);
    }
    for (const auto& child : sym.children()) scan(child);
  };
  scan(s);

  double total = 0.0;
  double err = 0.0, e = 0.0;

  auto inner_f = [&](double x) { return log_weight(s, x); };
  std::vector<double> pts(inner.begin(), inner.end());
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    if (b - a < 1e-300) continue;
    // power substitution at an interior singular origin
    if (origin_strength > 0.0 && a == 0.0) {
      total += integrate_adaptive_power0(inner_f, b, origin_strength, tol, &e);
    } else if (origin_strength > 0.0 && b == 0.0) {
      auto flip = [&](double x) { return inner_f(-x); };
      total += integrate_adaptive_power0(flip, -a, origin_strength, tol, &e);
    } else {
      total += integrate_adaptive(inner_f, a, b, tol, &e);
    }
    err += e;
  }

  auto tail_f = [&](double t) {
    const double x = 1.0 / t;
    const PointValue vp = s.eval(x);
    const PointValue vm = s.eval(-x);
    double acc = 0.0;
    if (!vp.pole && std::isfinite(std::abs(vp.value)))
      acc += std::log1p(std::abs(vp.value));
    if (!vm.pole && std::isfinite(std::abs(vm.value)))
      acc += std::log1p(std::abs(vm.value));
    return acc / (1.0 + t * t);
  };
  std::vector<double> tpts(tail.begin(), tail.end());
  for (size_t i = 0; i + 1 < tpts.size(); ++i) {
    const double a = tpts[i], b = tpts[i + 1];
    if (b - a < 1e-300) continue;
    if (a == 0.0) {
      total += integrate_adaptive_power0(tail_f, b, tail_strength, tol, &e);
    } else {
      total += integrate_adaptive(tail_f, a, b, tol, &e);
    }
    err += e;
  }

  if (err_acc) *err_acc = err;
  return total;
}

}  // namespace

const char* to_string(Properness v) {
  switch (v) {
    case Properness::Proper: return "Proper";
    case Properness::NotProper: return "NotProper";
    case Properness::Inconclusive: return "Inconclusive";
  }
  return "?";
}

PropernessVerdict properness_test(const Symbol& s, const PropernessConfig& cfg) {
  PropernessVerdict out;

  const auto cert = s.growth_cert();
  if (cert.rate_plus > 0.0 || cert.rate_minus > 0.0) {
    out.verdict = Properness::NotProper;
    out.integral_estimate = kInf;
    out.reason = "certified exponential growth on a half-axis";
    return out;
  }
  if (cert.origin_divergence) {
    out.verdict = Properness::NotProper;
    out.integral_estimate = kInf;
    out.reason = "non-integrable logarithmic singularity at the origin";
    return out;
  }
  if (s.tabulated_undersampled()) {
    out.verdict = Properness::Inconclusive;
    out.reason = "tabulated symbol with insufficient coverage";
    return out;
  }

  // refinement stability is the reported error: compare two passes at
  // different target tolerances
  double err1 = 0.0, err2 = 0.0;
  const double coarse = full_line_pass(s, cfg.quad_tol * cfg.refine_factor, &err1);
  const double fine = full_line_pass(s, cfg.quad_tol, &err2);
  out.integral_estimate = fine;
  out.error_estimate = std::abs(fine - coarse);
  out.verdict = Properness::Proper;
  out.reason = s.has_tabulated_leaf()
                   ? "finite log-integral (tabulated data, zero extension)"
                   : "finite log-integral";
  return out;
}

}  // namespace whlab
