#include "whlab/essential_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace whlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kPi = std::acos(-1.0);

// |k(tan th) - lambda| as a function of th in (-pi/2, pi/2); +inf at poles.
struct DistanceCurve {
  const Polynomial& p;
  const Polynomial& q;
  cplx lambda;
  double operator()(double th) const {
    const double x = std::tan(th);
    const cplx d = q.eval(x);
    if (std::abs(d) == 0.0) return kInf;
    const cplx v = p.eval(x) / d - lambda;
    return std::abs(v);
  }
};

double golden_refine(const std::function<double(double)>& f, double lo,
                     double hi) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 90 && (b - a) > 1e-16; ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

}  // namespace

double distance_to_range(const Polynomial& P, const Polynomial& Q, cplx lambda) {
  DistanceCurve f{P, Q, lambda};
  const int n = 8192;
  std::vector<double> th(n), val(n);
  for (int i = 0; i < n; ++i) {
    th[i] = -kPi / 2 + (i + 0.5) * kPi / n;
    val[i] = f(th[i]);
  }
  double best = kInf;
  for (int i = 0; i < n; ++i) {
    const double vm = (i > 0) ? val[i - 1] : kInf;
    const double vp = (i + 1 < n) ? val[i + 1] : kInf;
    best = std::min(best, val[i]);
    if (std::isfinite(val[i]) && val[i] <= vm && val[i] <= vp) {
      const double lo = (i > 0) ? th[i - 1] : th[i] - kPi / n;
      const double hi = (i + 1 < n) ? th[i + 1] : th[i] + kPi / n;
      best = std::min(best, golden_refine(f, lo, hi));
    }
  }
  // limit value at infinity belongs to the closure when deg P <= deg Q
  const int dp = P.degree(), dq = Q.degree();
  if (dp < dq) best = std::min(best, std::abs(lambda));
  if (dp == dq) best = std::min(best, std::abs(P.leading() / Q.leading() - lambda));
  return best;
}

RangeMembership essential_range_membership(const Symbol& s, cplx lambda,
                                           double tol) {
  if (!s.is_rational())
    throw std::invalid_argument("essential_range_membership: rational symbols only");
  RangeMembership out;
  out.distance = distance_to_range(s.num(), s.den(), lambda);
  out.member = out.distance <= tol;
  if (out.distance > tol && out.distance <= 2.0 * tol) {
    std::ostringstream os;
    os << "borderline essential-range membership: distance " << out.distance
       << " within (tol, 2*tol]";
    out.warnings.push_back(os.str());
  }
  return out;
}

RealRange real_symbol_range(const Symbol& s) {
  RealRange r;
  r.inf = kInf;
  r.sup = -kInf;

  // unbounded directions from variant analytics
  if (s.is_rational()) {
    const Polynomial& p = s.num();
    const Polynomial& q = s.den();
    const int d = p.degree() - q.degree();
    const double lead = (p.leading() / q.leading()).real();
    if (d > 0) {
      const double right = lead;
      const double left = lead * ((d % 2) ? -1.0 : 1.0);
      if (right > 0 || left > 0) r.bounded_above = false;
      if (right < 0 || left < 0) r.bounded_below = false;
    }
    if (q.degree() > 0) {
      for (const auto& rm : half_plane_split(q).real) {
        const double x0 = rm.root.real();
        const cplx pv = p.eval(x0);
        if (std::abs(pv) == 0.0) continue;
        if (rm.multiplicity % 2) {
          r.bounded_above = false;
          r.bounded_below = false;
        } else {
          // even-order pole: one-signed blowup
          const Polynomial qred = [&] {
            std::vector<cplx> rts;
            for (const auto& rr : roots(q))
              if (std::abs(rr.root - rm.root) > 1e-9)
                for (int k = 0; k < rr.multiplicity; ++k) rts.push_back(rr.root);
            return Polynomial::from_roots(q.leading(), rts);
          }();
          const double sign = (pv / qred.eval(x0)).real();
          if (sign > 0) r.bounded_above = false;
          else r.bounded_below = false;
        }
      }
    }
  } else if (s.kind() == Symbol::Kind::ExpPower) {
    if (s.exp_c() > 0.0) r.bounded_above = false;  // at infinity or origin
  } else {
    // composites / tabulated: conservative growth certificate
    const auto cert = s.growth_cert();
    if (cert.rate_plus > 0 || cert.rate_minus > 0 || cert.origin_divergence)
      r.bounded_above = false;
  }

  // sampled extremes (tan-compactified grid, finite values only)
  const int n = 8192;
  for (int i = 0; i < n; ++i) {
    const double th = -kPi / 2 + (i + 0.5) * kPi / n;
    const PointValue v = s.eval(std::tan(th));
    if (v.pole || !std::isfinite(v.value.real())) continue;
    r.inf = std::min(r.inf, v.value.real());
    r.sup = std::max(r.sup, v.value.real());
  }
  // limit at infinity for rational symbols
  if (s.is_rational() && s.num().degree() <= s.den().degree()) {
    double lim = 0.0;
    if (s.num().degree() == s.den().degree())
      lim = (s.num().leading() / s.den().leading()).real();
    r.inf = std::min(r.inf, lim);
    r.sup = std::max(r.sup, lim);
  }
  if (!r.bounded_below) r.inf = -kInf;
  if (!r.bounded_above) r.sup = kInf;
  return r;
}

}  // namespace whlab
