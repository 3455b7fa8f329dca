#include <cmath>

#include "whlab/fft.hpp"
#include "whlab/rational_wh.hpp"

namespace whlab {

namespace {

// Hardy-preserving taper (iB/(x+iB))^2 for the plus side (bounded
// holomorphic in the upper half-plane), conjugated for the minus side.
cplx taper(double x, double B, HardySide side) {
  const cplx w = cplx{0.0, B} / cplx{x, B};
  const cplx w2 = w * w;
  return side == HardySide::Plus ? w2 : std::conj(w2);
}

}  // namespace

HardyCheck validate_hardy_membership(const RationalFunction& f, HardySide side,
                                     const Grid& full_grid) {
  HardyCheck out;

  // analytic test: square-integrable and all poles strictly in the lower
  // (plus) / upper (minus) half-plane
  auto pair = reduce_coprime(f.num, f.den);
  if (pair.p.is_zero()) {
    out.analytic_pass = true;
    out.wrong_side_fraction = 0.0;
    out.note = "zero function";
    return out;
  }
  if (pair.p.degree() >= pair.q.degree()) {
    throw std::invalid_argument(
        "validate_hardy_membership: not square-integrable (degree drop < 1)");
  }
  const RootSplit poles = half_plane_split(pair.q);
  if (poles.deg_real() > 0) {
    throw std::invalid_argument(
        "validate_hardy_membership: real pole, not square-integrable");
  }
  const int wrong_poles =
      side == HardySide::Plus ? poles.deg_upper() : poles.deg_lower();
  out.analytic_pass = wrong_poles == 0;
  if (!out.analytic_pass) {
    out.note = "pole in the wrong half-plane";
  }

  // numerical test: energy of the tapered sample on the wrong side of the
  // dual axis
  const Grid& g = full_grid;
  const Grid dual = g.dual();
  const double B = g.x_max / 8.0;
  Vec v(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.point(j);
    v[j] = f.eval(cplx{x, 0.0}) * taper(x, B, side);
  }
  const Vec hat = fourier_forward(g, v);
  double wrong = 0.0, total = 0.0;
  for (int k = 0; k < dual.n; ++k) {
    const double xi = dual.point(k);
    const double e = std::norm(hat[k]);
    total += e;
    if ((side == HardySide::Plus && xi < 0.0) ||
        (side == HardySide::Minus && xi > 0.0)) {
      wrong += e;
    }
  }
  out.wrong_side_fraction = total > 0 ? wrong / total : 0.0;
  return out;
}

}  // namespace whlab
