#pragma once

#include <complex>
#include <string>
#include <vector>

#include "whlab/config.hpp"

namespace whlab {

using cplx = std::complex<double>;

/// Complex polynomial, coefficients ascending in power. The zero
/// polynomial is the empty coefficient list; its degree is negative
/// (reported as -1, ordered below every true degree).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);
  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial identity_x();  // the monomial x
  /// leading * prod (x - r_k), multiplicities expanded.
  static Polynomial from_roots(cplx leading, const std::vector<cplx>& roots);

  const std::vector<cplx>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx leading() const { return c_.empty() ? cplx{0.0} : c_.back(); }
  cplx operator[](size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }

  cplx eval(cplx x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial conj_reflect() const;  // entrywise conjugated coefficients

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;

  bool almost_equal(const Polynomial& o,
                    double rel_tol = default_root_config().coeff_rel_tol) const;

  /// Comma-separated ascending coefficients, entries as a+bi.
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  void strip_leading_zeros();
  std::vector<cplx> c_;
};

inline Polynomial operator*(cplx s, const Polynomial& p) { return p * s; }

struct RootMult {
  cplx root;
  int multiplicity;
};

/// Roots of a polynomial partitioned by half-plane, with the tolerance
/// that decided the real/near-real classification.
struct RootSplit {
  std::vector<RootMult> lower;  // Im < -eps_real
  std::vector<RootMult> real;   // |Im| <= eps_real
  std::vector<RootMult> upper;  // Im > eps_real
  double eps_real = 0.0;
  double factor_residual = 0.0;  // relative coefficient error of the re-product
  Warnings warnings;

  int total_multiplicity() const;
  int deg_lower() const;
  int deg_real() const;
  int deg_upper() const;
  int deg_leq() const { return deg_lower() + deg_real(); }
  int deg_geq() const { return deg_real() + deg_upper(); }

  Polynomial lower_factor() const;  // monic
  Polynomial real_factor() const;   // monic
  Polynomial upper_factor() const;  // monic
};

/// All roots with multiplicities (companion-matrix eigenvalues, Newton
/// refinement, cluster detection). Throws NumericalFailure when the
/// refined roots do not reproduce the polynomial.
std::vector<RootMult> roots(const Polynomial& p,
                            const RootConfig& cfg = default_root_config());

RootSplit half_plane_split(const Polynomial& p, double eps_real,
                           const RootConfig& cfg = default_root_config());
inline RootSplit half_plane_split(const Polynomial& p) {
  return half_plane_split(p, default_root_config().eps_real);
}

struct CoprimePair {
  Polynomial p, q;
  Warnings warnings;
};

/// Cancels common zeros of P and Q by root matching within the cluster
/// radius; P'/Q' equals P/Q as a rational function. Near-common roots
/// (matching distance in (radius, 10*radius]) produce a warning.
CoprimePair reduce_coprime(const Polynomial& P, const Polynomial& Q,
                           const RootConfig& cfg = default_root_config());

}  // namespace whlab
