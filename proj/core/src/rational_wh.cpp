#include "whlab/rational_wh.hpp"

#include <algorithm>
#include <cmath>

#include "whlab/essential_range.hpp"
#include "whlab/symbol.hpp"

namespace whlab {

namespace {

// basis { (num_base / den) x^j : 0 <= j < count }
RationalBasis monomial_weighted(const Polynomial& num_base, const Polynomial& den,
                                int count) {
  RationalBasis out;
  Polynomial xj = Polynomial::constant(1.0);
  for (int j = 0; j < count; ++j) {
    out.push_back({num_base * xj, den});
    xj = xj * Polynomial::identity_x();
  }
  return out;
}

}  // namespace

std::string RationalFunction::to_string() const {
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

const char* to_string(SpectralCategory c) {
  switch (c) {
    case SpectralCategory::Resolvent: return "Resolvent";
    case SpectralCategory::RegularValueNotResolvent: return "RegularValueNotResolvent";
    case SpectralCategory::PointSpectrum: return "PointSpectrum";
    case SpectralCategory::ContinuousSpectrum: return "ContinuousSpectrum";
    case SpectralCategory::ResidualSpectrum: return "ResidualSpectrum";
  }
  return "?";
}

DomainDescriptor domain_descriptor(const Polynomial& P, const Polynomial& Q,
                                   double eps_real) {
  auto pair = reduce_coprime(P, Q);
  DomainDescriptor out;
  out.warnings = pair.warnings;
  Polynomial q_real = Polynomial::constant(1.0);
  if (pair.q.degree() > 0) {
    RootSplit split = half_plane_split(pair.q, eps_real);
    q_real = split.real_factor();
    out.warnings.insert(out.warnings.end(), split.warnings.begin(),
                        split.warnings.end());
  }
  out.q_real = q_real;
  const int dq_real = q_real.degree();
  out.sigma = std::max(dq_real, pair.p.degree() - pair.q.degree() + dq_real);
  return out;
}

RationalBasis kernel_basis(const Polynomial& P, const Polynomial& Q,
                           double eps_real) {
  auto pair = reduce_coprime(P, Q);
  const RootSplit sp = half_plane_split(pair.p, eps_real);
  const RootSplit sq = half_plane_split(pair.q, eps_real);
  const int bound =
      std::min(sp.deg_lower() - sq.deg_leq(), sq.deg_upper() - sp.deg_geq());
  if (bound <= 0) return {};
  Polynomial q_leq = sq.lower_factor() * sq.real_factor();
  return monomial_weighted(q_leq, sp.lower_factor(), bound);
}

RationalBasis cokernel_basis(const Polynomial& P, const Polynomial& Q,
                             double eps_real) {
  auto pair = reduce_coprime(P, Q);
  const RootSplit sp = half_plane_split(pair.p, eps_real);
  const RootSplit sq = half_plane_split(pair.q, eps_real);
  const int bound = sp.deg_upper() - sq.deg_upper();
  if (bound <= 0) return {};
  // reflected strictly-upper factors: zeros move to the lower half-plane,
  // so the elements are square-integrable with no real poles
  Polynomial num = sq.upper_factor().conj_reflect();
  Polynomial den = sp.upper_factor().conj_reflect();
  return monomial_weighted(num, den, bound);
}

SpectralClassification classify_point(const Polynomial& P, const Polynomial& Q,
                                      cplx lambda, double eps_real) {
  auto pair = reduce_coprime(P, Q);
  SpectralClassification out;
  out.lambda = lambda;
  out.warnings = pair.warnings;

  const Polynomial shifted = pair.p - pair.q * lambda;  // numerator of k - lambda
  if (shifted.is_zero()) {
    throw std::domain_error(
        "classify_point: symbol is a.e. equal to lambda; the shifted operator is 0");
  }

  const RootSplit sn = half_plane_split(shifted, eps_real);
  const RootSplit sq = half_plane_split(pair.q, eps_real);
  for (const auto& w : sn.warnings) out.warnings.push_back(w);
  for (const auto& w : sq.warnings) out.warnings.push_back(w);

  out.degrees.n_lambda_lower = sn.deg_lower();
  out.degrees.n_lambda_geq = sn.deg_geq();
  out.degrees.n_lambda_upper = sn.deg_upper();
  out.degrees.q_leq = sq.deg_leq();
  out.degrees.q_upper = sq.deg_upper();

  // lambda sits in the closure of the range iff the shifted numerator has
  // a real zero (value attained) or drops below deg Q (limit at infinity)
  out.in_closure_of_range = sn.deg_real() > 0 || shifted.degree() < pair.q.degree();
  out.is_fredholm = !out.in_closure_of_range;

  out.dim_ker = std::max(
      0, std::min(sn.deg_lower() - sq.deg_leq(), sq.deg_upper() - sn.deg_geq()));
  out.dim_coker = std::max(0, sn.deg_upper() - sq.deg_upper());

  if (out.is_fredholm) {
    out.index = out.dim_ker - out.dim_coker;
    if (sn.deg_upper() == sq.deg_upper()) {
      out.category = SpectralCategory::Resolvent;
    } else if (sn.deg_upper() > sq.deg_upper()) {
      out.category = SpectralCategory::RegularValueNotResolvent;
    } else {
      out.category = SpectralCategory::PointSpectrum;
    }
  } else {
    if (out.dim_ker > 0) {
      out.category = SpectralCategory::PointSpectrum;
    } else if (out.dim_coker > 0) {
      out.category = SpectralCategory::ResidualSpectrum;
    } else {
      out.category = SpectralCategory::ContinuousSpectrum;
    }
  }

  // cross-check the exact degree test against the sampled essential range
  const double dist = distance_to_range(pair.p, pair.q, lambda);
  const double range_tol = 1e-7;
  const bool sampled_member = dist <= range_tol;
  if (sampled_member != out.in_closure_of_range) {
    out.warnings.push_back(
        "degree-based closure test disagrees with the sampled essential range");
  } else if (dist > range_tol && dist <= 2.0 * range_tol) {
    out.warnings.push_back("borderline essential-range distance");
  }
  out.unreliable = !out.warnings.empty();
  return out;
}

DeficiencyReport deficiency(const Polynomial& p, const Polynomial& q,
                            double eps_real) {
  for (const Polynomial* poly : {&p, &q}) {
    for (const auto& c : poly->coeffs()) {
      if (std::abs(c.imag()) > 1e-12 * (1.0 + std::abs(c))) {
        throw std::invalid_argument("deficiency: real polynomials required");
      }
    }
  }
  auto pair = reduce_coprime(p, q);
  DeficiencyReport out;
  out.warnings = pair.warnings;

  const Polynomial f = pair.p - pair.q * cplx{0.0, 1.0};  // p - i q
  const RootSplit sf = half_plane_split(f, eps_real);
  for (const auto& w : sf.warnings) out.warnings.push_back(w);
  if (sf.deg_real() > 0) {
    throw NumericalFailure(
        "deficiency: p - iq acquired a numerically real root; "
        "inputs are likely not coprime or are badly conditioned");
  }
  out.Q_plus = sf.upper_factor();
  out.Q_minus = sf.lower_factor();

  const RootSplit sq = pair.q.degree() > 0 ? half_plane_split(pair.q, eps_real)
                                           : RootSplit{};
  out.q_lower = pair.q.degree() > 0 ? sq.lower_factor() : Polynomial::constant(1.0);
  const int dq_lower = out.q_lower.degree();

  out.n_plus = out.Q_plus.degree() - dq_lower;
  out.n_minus = out.Q_minus.degree() - dq_lower;
  if (out.n_plus < 0 || out.n_minus < 0) {
    throw NumericalFailure("deficiency: negative index from degree data");
  }
  // deficiency vectors live in H_+, so every denominator must have its
  // zeros strictly below the axis: the plus side needs the reflection of
  // Q_plus, the minus side uses Q_minus as is
  out.basis_plus =
      monomial_weighted(out.q_lower, out.Q_plus.conj_reflect(), out.n_plus);
  out.basis_minus = monomial_weighted(out.q_lower, out.Q_minus, out.n_minus);
  return out;
}

}  // namespace whlab
