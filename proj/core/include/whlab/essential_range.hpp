#pragma once

#include "whlab/polynomial.hpp"
#include "whlab/symbol.hpp"

namespace whlab {

struct RangeMembership {
  bool member = false;
  double distance = 0.0;
  Warnings warnings;
};

/// Distance from lambda to the closure of k(R) for rational k = P/Q
/// (coprime). The limit value at infinity is adjoined when
/// deg P <= deg Q. Dense sampling in the tan-compactified variable plus
/// local refinement of every bracketed minimum of |k(x) - lambda|.
double distance_to_range(const Polynomial& P, const Polynomial& Q, cplx lambda);

/// member <=> distance <= tol; distance in (tol, 2 tol] raises a
/// borderline warning.
RangeMembership essential_range_membership(const Symbol& s, cplx lambda,
                                           double tol);

/// Essential bounds of a real symbol over the line (sampled + variant
/// analytics for the unbounded directions).
struct RealRange {
  double inf = 0.0;
  double sup = 0.0;
  bool bounded_below = true;
  bool bounded_above = true;
};
RealRange real_symbol_range(const Symbol& s);

}  // namespace whlab
