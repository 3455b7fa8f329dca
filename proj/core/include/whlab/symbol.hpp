#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whlab/polynomial.hpp"

namespace whlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;  // endpoints may be +-infinity
  bool lo_open = false;
  bool hi_open = false;
  bool contains(double x) const {
    if (lo_open ? x <= lo : x < lo) return false;
    if (hi_open ? x >= hi : x > hi) return false;
    return true;
  }
};

/// Pointwise value of a symbol; `pole` marks real poles of rational
/// variants (value is meaningless there).
struct PointValue {
  cplx value{0.0};
  bool pole = false;
};

/// Immutable symbol representation: rational P/Q, indicator of a finite
/// interval union, exp(c*|x|^alpha), tabulated samples, and scaled / sum /
/// product composites. Values are shareable across threads.
class Symbol {
 public:
  enum class Kind { Rational, Indicator, ExpPower, Scaled, Sum, Product, Tabulated };

  static Symbol rational(Polynomial num, Polynomial den);
  static Symbol constant(cplx c);
  static Symbol indicator(std::vector<Interval> intervals);
  static Symbol exp_power(double c, double alpha);
  static Symbol scaled(cplx factor, Symbol s);
  static Symbol sum(Symbol a, Symbol b);
  static Symbol product(Symbol a, Symbol b);
  /// Tabulated values with linear interpolation on [grid.front(),
  /// grid.back()] and zero extension outside.
  static Symbol tabulated(std::vector<double> grid, std::vector<cplx> values);
  /// e^{rate*x} as an indicator/exp-power composite (one-sided growth).
  static Symbol one_sided_exp(double rate);

  Kind kind() const;
  /// Throws std::invalid_argument on NaN input.
  PointValue eval(double x) const;

  // Rational accessors (throw std::logic_error for other kinds).
  const Polynomial& num() const;
  const Polynomial& den() const;
  const std::vector<Interval>& intervals() const;
  double exp_c() const;
  double exp_alpha() const;
  cplx scale_factor() const;
  const std::vector<double>& table_grid() const;

  bool is_rational() const { return kind() == Kind::Rational; }

  /// Conservative certificate that the symbol is real-valued a.e.
  bool certified_real() const;
  /// Conservative certificate that the symbol is >= 0 a.e.
  bool certified_nonnegative() const;

  /// Certified lower-bound analytics used by the properness classifier.
  struct GrowthCert {
    double rate_plus = 0.0;   // |k(x)| >= delta e^{rate x} eventually, x -> +inf
    double rate_minus = 0.0;  // same for x -> -inf
    bool tail_positive_plus = false;
    bool tail_positive_minus = false;
    bool origin_divergence = false;  // log-integral diverges at x = 0
    bool positive_near_origin = false;
    bool nonneg = false;
  };
  GrowthCert growth_cert() const;

  /// Break/singular points the quadrature should honor; singular entries
  /// carry the local power strength of ln(1+|k|).
  struct SingularPoint {
    double x;
    double strength;  // 0 = mere breakpoint/log, in (0,1): |x-x0|^{-strength}
  };
  std::vector<SingularPoint> quad_breakpoints() const;

  /// True if any tabulated leaf has fewer than `min_points` samples.
  bool tabulated_undersampled(int min_points = 8) const;
  bool has_tabulated_leaf() const;

  /// Children of composite nodes (empty for leaves).
  std::vector<Symbol> children() const;

  std::string describe() const;

 private:
  struct Node;
  explicit Symbol(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Parses the CLI symbol grammar:
///   rational:<P>/<Q>     coefficient lists, ascending, complex a+bi
///   indicator:[a,b]u[c,d]   ('u' or the union sign accepted)
///   exppower:c,alpha
///   table:<path.csv>     columns x,re[,im]
Symbol parse_symbol(const std::string& text);

}  // namespace whlab
