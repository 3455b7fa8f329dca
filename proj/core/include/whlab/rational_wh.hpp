#pragma once

#include <optional>

#include "whlab/grid.hpp"
#include "whlab/polynomial.hpp"

namespace whlab {

/// dom = (q_real / (x+i)^sigma) H_+ for the rational multiplier P/Q.
struct DomainDescriptor {
  Polynomial q_real;  // monic, zeros = real zeros of Q
  int sigma = 0;      // max(deg q_real, deg P - deg Q + deg q_real)
  Warnings warnings;
};

struct RationalFunction {
  Polynomial num;
  Polynomial den;
  cplx eval(cplx x) const { return num.eval(x) / den.eval(x); }
  std::string to_string() const;
};
using RationalBasis = std::vector<RationalFunction>;

enum class SpectralCategory {
  Resolvent,
  RegularValueNotResolvent,
  PointSpectrum,
  ContinuousSpectrum,
  ResidualSpectrum,
};
const char* to_string(SpectralCategory c);

struct DegreeData {
  int n_lambda_lower = 0;  // strictly lower half-plane zeros of P - lambda Q
  int n_lambda_geq = 0;    // closed upper
  int n_lambda_upper = 0;  // strictly upper
  int q_leq = 0;           // closed lower half-plane zeros of Q
  int q_upper = 0;         // strictly upper
};

struct SpectralClassification {
  cplx lambda;
  bool in_closure_of_range = false;
  bool is_fredholm = false;
  int dim_ker = 0;
  int dim_coker = 0;
  std::optional<int> index;  // defined at Fredholm points
  SpectralCategory category = SpectralCategory::Resolvent;
  DegreeData degrees;
  bool unreliable = false;
  Warnings warnings;
};

struct DeficiencyReport {
  int n_plus = 0;
  int n_minus = 0;
  RationalBasis basis_plus;
  RationalBasis basis_minus;
  Polynomial Q_plus;   // upper-half-plane factor of p - iq
  Polynomial Q_minus;  // lower
  Polynomial q_lower;  // strictly-lower factor of q
  Warnings warnings;
};

/// Inputs are normalized with reduce_coprime; all degree arithmetic is
/// exact on the root-split data.
DomainDescriptor domain_descriptor(const Polynomial& P, const Polynomial& Q,
                                   double eps_real = default_root_config().eps_real);

/// Kernel of the rational multiplier compressed to H_+:
/// (Q_leq / P_lower) r, deg r < min(deg P_lower - deg Q_leq,
///                                  deg Q_upper - deg P_geq).
RationalBasis kernel_basis(const Polynomial& P, const Polynomial& Q,
                           double eps_real = default_root_config().eps_real);

/// Orthogonal complement of the range: (refl(Q_upper)/refl(P_upper)) r,
/// deg r < deg P_upper - deg Q_upper, with refl the coefficient
/// conjugation (which mirrors the roots across the real axis).
RationalBasis cokernel_basis(const Polynomial& P, const Polynomial& Q,
                             double eps_real = default_root_config().eps_real);

/// Full spectral/Fredholm classification of one lambda. The shifted
/// numerator is N = P - lambda Q (the numerator of k - lambda).
SpectralClassification classify_point(const Polynomial& P, const Polynomial& Q,
                                      cplx lambda,
                                      double eps_real = default_root_config().eps_real);

/// Deficiency indices and spaces for a real rational symbol p/q via the
/// half-plane factorization p - iq = Q_plus Q_minus.
DeficiencyReport deficiency(const Polynomial& p, const Polynomial& q,
                            double eps_real = default_root_config().eps_real);

enum class HardySide { Plus, Minus };

struct HardyCheck {
  bool analytic_pass = false;  // pole locations + square-integrability
  double wrong_side_fraction = 1.0;
  std::string note;
};

/// Analytic membership test (pole half-plane + degree drop) combined with
/// the discrete-Fourier energy fraction on the wrong half-axis. The
/// numerical sample is tapered by a Hardy-preserving multiplier
/// (iB/(x+iB))^2 so the domain-truncation seam does not leak into the
/// measured fraction.
HardyCheck validate_hardy_membership(const RationalFunction& f, HardySide side,
                                     const Grid& full_grid);

}  // namespace whlab
