#include "whlab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "whlab/complex_text.hpp"

namespace whlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

struct Symbol::Node {
  Kind kind;
  // Rational
  Polynomial num, den;
  std::vector<double> real_poles;
  // Indicator
  std::vector<Interval> intervals;
  // ExpPower
  double c = 0.0, alpha = 0.0;
  // Scaled
  cplx factor{1.0};
  // children
  std::shared_ptr<const Node> a, b;
  // Tabulated
  std::vector<double> grid;
  std::vector<cplx> values;
};

Symbol Symbol::rational(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::invalid_argument("rational symbol: zero denominator");
  auto reduced = reduce_coprime(num, den);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->num = std::move(reduced.p);
  n->den = std::move(reduced.q);
  if (n->den.degree() > 0) {
    for (const auto& r : half_plane_split(n->den).real)
      n->real_poles.push_back(r.root.real());
  }
  return Symbol(std::move(n));
}

Symbol Symbol::constant(cplx c) {
  return rational(Polynomial::constant(c), Polynomial::constant(1.0));
}

Symbol Symbol::indicator(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].lo < intervals[i - 1].hi) {
      throw std::invalid_argument("indicator symbol: overlapping intervals");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Indicator;
  n->intervals = std::move(intervals);
  return Symbol(std::move(n));
}

Symbol Symbol::exp_power(double c, double alpha) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ExpPower;
  n->c = c;
  n->alpha = alpha;
  return Symbol(std::move(n));
}

Symbol Symbol::scaled(cplx factor, Symbol s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scaled;
  n->factor = factor;
  n->a = s.n_;
  return Symbol(std::move(n));
}

Symbol Symbol::sum(Symbol a, Symbol b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->a = a.n_;
  n->b = b.n_;
  return Symbol(std::move(n));
}

Symbol Symbol::product(Symbol a, Symbol b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->a = a.n_;
  n->b = b.n_;
  return Symbol(std::move(n));
}

Symbol Symbol::tabulated(std::vector<double> grid, std::vector<cplx> values) {
  if (grid.size() != values.size())
    throw std::invalid_argument("tabulated symbol: grid/value length mismatch");
  for (size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("tabulated symbol: grid not strictly increasing");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tabulated;
  n->grid = std::move(grid);
  n->values = std::move(values);
  return Symbol(std::move(n));
}

Symbol Symbol::one_sided_exp(double rate) {
  // e^{rate x} = 1_{[0,inf)} e^{|rate||x| sgn(rate)} + 1_{(-inf,0)} e^{-...}
  const double r = std::abs(rate);
  const double sgn = rate >= 0 ? 1.0 : -1.0;
  Symbol right = product(indicator({{0.0, kInf, false, false}}), exp_power(sgn * r, 1.0));
  Symbol left = product(indicator({{-kInf, 0.0, false, true}}), exp_power(-sgn * r, 1.0));
  return sum(std::move(right), std::move(left));
}

Symbol::Kind Symbol::kind() const { return n_->kind; }

PointValue Symbol::eval(double x) const {
  if (std::isnan(x)) throw std::invalid_argument("symbol eval: NaN input");
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::Rational: {
      for (double p : n.real_poles) {
        if (x == p || std::abs(x - p) <= 1e-14 * (1.0 + std::abs(p)))
          return {cplx{0.0}, true};
      }
      const cplx d = n.den.eval(x);
      if (std::abs(d) == 0.0) return {cplx{0.0}, true};
      return {n.num.eval(x) / d, false};
    }
    case Kind::Indicator: {
      for (const auto& iv : n.intervals)
        if (iv.contains(x)) return {cplx{1.0}, false};
      return {cplx{0.0}, false};
    }
    case Kind::ExpPower: {
      if (x == 0.0 && n.alpha < 0.0) {
        // exp(c*|x|^alpha) -> +inf (c>0) or 0 (c<0) as x -> 0
        return {cplx{n.c > 0 ? kInf : 0.0}, false};
      }
      if (x == 0.0 && n.alpha == 0.0) return {cplx{std::exp(n.c)}, false};
      return {cplx{std::exp(n.c * std::pow(std::abs(x), n.alpha))}, false};
    }
    case Kind::Scaled: {
      PointValue v = Symbol(n.a).eval(x);
      v.value *= n.factor;
      return v;
    }
    case Kind::Sum: {
      PointValue va = Symbol(n.a).eval(x);
      PointValue vb = Symbol(n.b).eval(x);
      return {va.value + vb.value, va.pole || vb.pole};
    }
    case Kind::Product: {
      PointValue va = Symbol(n.a).eval(x);
      PointValue vb = Symbol(n.b).eval(x);
      return {va.value * vb.value, va.pole || vb.pole};
    }
    case Kind::Tabulated: {
      if (n.grid.empty() || x < n.grid.front() || x > n.grid.back())
        return {cplx{0.0}, false};
      auto it = std::lower_bound(n.grid.begin(), n.grid.end(), x);
      if (it == n.grid.begin()) return {n.values.front(), false};
      const size_t hi = static_cast<size_t>(it - n.grid.begin());
      const size_t lo = hi - 1;
      const double t = (x - n.grid[lo]) / (n.grid[hi] - n.grid[lo]);
      return {n.values[lo] * (1.0 - t) + n.values[hi] * t, false};
    }
  }
  return {};
}

const Polynomial& Symbol::num() const {
  if (n_->kind != Kind::Rational) throw std::logic_error("not a rational symbol");
  return n_->num;
}
const Polynomial& Symbol::den() const {
  if (n_->kind != Kind::Rational) throw std::logic_error("not a rational symbol");
  return n_->den;
}
const std::vector<Interval>& Symbol::intervals() const {
  if (n_->kind != Kind::Indicator) throw std::logic_error("not an indicator symbol");
  return n_->intervals;
}
double Symbol::exp_c() const {
  if (n_->kind != Kind::ExpPower) throw std::logic_error("not an exp-power symbol");
  return n_->c;
}
double Symbol::exp_alpha() const {
  if (n_->kind != Kind::ExpPower) throw std::logic_error("not an exp-power symbol");
  return n_->alpha;
}
cplx Symbol::scale_factor() const {
  if (n_->kind != Kind::Scaled) throw std::logic_error("not a scaled symbol");
  return n_->factor;
}
const std::vector<double>& Symbol::table_grid() const {
  if (n_->kind != Kind::Tabulated) throw std::logic_error("not a tabulated symbol");
  return n_->grid;
}

bool Symbol::certified_real() const {
  const Node& n = *n_;
  auto poly_real = [](const Polynomial& p) {
    for (const auto& c : p.coeffs())
      if (std::abs(c.imag()) > 1e-14 * (1.0 + std::abs(c))) return false;
    return true;
  };
  switch (n.kind) {
    case Kind::Rational:
      return poly_real(n.num) && poly_real(n.den);
    case Kind::Indicator:
      return true;
    case Kind::ExpPower:
      return true;
    case Kind::Scaled:
      return n.factor.imag() == 0.0 && Symbol(n.a).certified_real();
    case Kind::Sum:
    case Kind::Product:
      return Symbol(n.a).certified_real() && Symbol(n.b).certified_real();
    case Kind::Tabulated:
      for (const auto& v : n.values)
        if (v.imag() != 0.0) return false;
      return true;
  }
  return false;
}

bool Symbol::certified_nonnegative() const {
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::Rational: {
      if (!certified_real()) return false;
      // constants only; general rational positivity is decided elsewhere
      return n.num.degree() <= 0 && n.den.degree() <= 0 &&
             (n.num.is_zero() ||
              n.num.leading().real() * n.den.leading().real() >= 0.0);
    }
    case Kind::Indicator:
      return true;
    case Kind::ExpPower:
      return true;
    case Kind::Scaled:
      return n.factor.imag() == 0.0 && n.factor.real() >= 0.0 &&
             Symbol(n.a).certified_nonnegative();
    case Kind::Sum:
    case Kind::Product:
      return Symbol(n.a).certified_nonnegative() &&
             Symbol(n.b).certified_nonnegative();
    case Kind::Tabulated:
      for (const auto& v : n.values)
        if (v.imag() != 0.0 || v.real() < 0.0) return false;
      return true;
  }
  return false;
}

Symbol::GrowthCert Symbol::growth_cert() const {
  const Node& n = *n_;
  GrowthCert g{};
  g.nonneg = certified_nonnegative();
  switch (n.kind) {
    case Kind::Rational:
      // |P/Q| ~ |x|^{dP-dQ}: positive tails, no exponential growth
      g.tail_positive_plus = g.tail_positive_minus = !n.num.is_zero();
      g.positive_near_origin = std::abs(n.num.eval(0.0)) > 0.0;
      return g;
    case Kind::Indicator: {
      for (const auto& iv : n.intervals) {
        if (iv.hi == kInf) g.tail_positive_plus = true;
        if (iv.lo == -kInf) g.tail_positive_minus = true;
        if (iv.contains(0.0) && iv.lo < 0.0 && iv.hi > 0.0)
          g.positive_near_origin = true;
      }
      return g;
    }
    case Kind::ExpPower: {
      g.tail_positive_plus = g.tail_positive_minus = true;
      g.positive_near_origin = n.alpha >= 0.0 || n.c < 0.0;
      if (n.c > 0.0 && n.alpha >= 1.0) g.rate_plus = g.rate_minus = n.c;
      if (n.c > 0.0 && n.alpha <= -1.0) g.origin_divergence = true;
      return g;
    }
    case Kind::Scaled: {
      g = Symbol(n.a).growth_cert();
      if (std::abs(n.factor) == 0.0) return GrowthCert{};
      g.nonneg = certified_nonnegative();
      return g;
    }
    case Kind::Sum: {
      GrowthCert ga = Symbol(n.a).growth_cert();
      GrowthCert gb = Symbol(n.b).growth_cert();
      if (!(ga.nonneg && gb.nonneg)) return g;  // cancellation possible
      g.rate_plus = std::max(ga.rate_plus, gb.rate_plus);
      g.rate_minus = std::max(ga.rate_minus, gb.rate_minus);
      g.tail_positive_plus = ga.tail_positive_plus || gb.tail_positive_plus;
      g.tail_positive_minus = ga.tail_positive_minus || gb.tail_positive_minus;
      g.origin_divergence = ga.origin_divergence || gb.origin_divergence;
      g.positive_near_origin = ga.positive_near_origin || gb.positive_near_origin;
      return g;
    }
    case Kind::Product: {
      GrowthCert ga = Symbol(n.a).growth_cert();
      GrowthCert gb = Symbol(n.b).growth_cert();
      g.tail_positive_plus = ga.tail_positive_plus && gb.tail_positive_plus;
      g.tail_positive_minus = ga.tail_positive_minus && gb.tail_positive_minus;
      if (g.tail_positive_plus) g.rate_plus = ga.rate_plus + gb.rate_plus;
      if (g.tail_positive_minus) g.rate_minus = ga.rate_minus + gb.rate_minus;
      g.positive_near_origin = ga.positive_near_origin && gb.positive_near_origin;
      g.origin_divergence = (ga.origin_divergence && gb.positive_near_origin) ||
                            (gb.origin_divergence && ga.positive_near_origin);
      return g;
    }
    case Kind::Tabulated:
      return g;  // never certified
  }
  return g;
}

std::vector<Symbol::SingularPoint> Symbol::quad_breakpoints() const {
  const Node& n = *n_;
  std::vector<SingularPoint> out;
  switch (n.kind) {
    case Kind::Rational:
      for (double p : n.real_poles) out.push_back({p, 0.0});
      break;
    case Kind::Indicator:
      for (const auto& iv : n.intervals) {
        if (std::isfinite(iv.lo)) out.push_back({iv.lo, 0.0});
        if (std::isfinite(iv.hi)) out.push_back({iv.hi, 0.0});
      }
      break;
    case Kind::ExpPower:
      // alpha < 0: the log-weight itself blows up like |x|^{-|alpha|};
      // 0 < alpha < 1: bounded but with an |x|^{-(1-alpha)} derivative kink
      if (n.alpha < 0.0)
        out.push_back({0.0, std::min(0.999, -n.alpha)});
      else if (n.alpha > 0.0 && n.alpha < 1.0)
        out.push_back({0.0, 1.0 - n.alpha});
      break;
    case Kind::Scaled:
      out = Symbol(n.a).quad_breakpoints();
      break;
    case Kind::Sum:
    case Kind::Product: {
      out = Symbol(n.a).quad_breakpoints();
      auto more = Symbol(n.b).quad_breakpoints();
      out.insert(out.end(), more.begin(), more.end());
      break;
    }
    case Kind::Tabulated:
      if (!n.grid.empty()) {
        out.push_back({n.grid.front(), 0.0});
        out.push_back({n.grid.back(), 0.0});
      }
      break;
  }
  return out;
}

bool Symbol::tabulated_undersampled(int min_points) const {
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::Tabulated:
      return static_cast<int>(n.grid.size()) < min_points;
    case Kind::Scaled:
      return Symbol(n.a).tabulated_undersampled(min_points);
    case Kind::Sum:
    case Kind::Product:
      return Symbol(n.a).tabulated_undersampled(min_points) ||
             Symbol(n.b).tabulated_undersampled(min_points);
    default:
      return false;
  }
}

bool Symbol::has_tabulated_leaf() const {
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::Tabulated:
      return true;
    case Kind::Scaled:
      return Symbol(n.a).has_tabulated_leaf();
    case Kind::Sum:
    case Kind::Product:
      return Symbol(n.a).has_tabulated_leaf() || Symbol(n.b).has_tabulated_leaf();
    default:
      return false;
  }
}

std::vector<Symbol> Symbol::children() const {
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::Scaled:
      return {Symbol(n.a)};
    case Kind::Sum:
    case Kind::Product:
      return {Symbol(n.a), Symbol(n.b)};
    default:
      return {};
  }
}

std::string Symbol::describe() const {
  const Node& n = *n_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Rational:
      os << "rational:" << n.num.to_string() << "/" << n.den.to_string();
      break;
    case Kind::Indicator: {
      os << "indicator:";
      bool first = true;
      for (const auto& iv : n.intervals) {
        if (!first) os << "u";
        first = false;
        os << "[" << iv.lo << "," << iv.hi << "]";
      }
      break;
    }
    case Kind::ExpPower:
      os << "exppower:" << n.c << "," << n.alpha;
      break;
    case Kind::Scaled:
      os << format_complex(n.factor) << "*(" << Symbol(n.a).describe() << ")";
      break;
    case Kind::Sum:
      os << "(" << Symbol(n.a).describe() << ")+(" << Symbol(n.b).describe() << ")";
      break;
    case Kind::Product:
      os << "(" << Symbol(n.a).describe() << ")*(" << Symbol(n.b).describe() << ")";
      break;
    case Kind::Tabulated:
      os << "table[" << n.grid.size() << " points]";
      break;
  }
  return os.str();
}

Symbol parse_symbol(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("symbol spec missing ':' tag: " + text);
  const std::string tag = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);

  if (tag == "rational") {
    auto slash = body.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("rational symbol needs <P>/<Q>: " + text);
    return Symbol::rational(Polynomial::parse(body.substr(0, slash)),
                            Polynomial::parse(body.substr(slash + 1)));
  }
  if (tag == "indicator") {
    std::vector<Interval> ivs;
    size_t pos = 0;
    while (pos < body.size()) {
      auto lb = body.find('[', pos);
      auto rb = body.find(']', pos);
      if (lb == std::string::npos || rb == std::string::npos)
        throw std::invalid_argument("indicator symbol: malformed interval list");
      auto comma = body.find(',', lb);
      if (comma == std::string::npos || comma > rb)
        throw std::invalid_argument("indicator symbol: malformed interval list");
      Interval iv;
      iv.lo = std::stod(body.substr(lb + 1, comma - lb - 1));
      iv.hi = std::stod(body.substr(comma + 1, rb - comma - 1));
      if (!(iv.lo < iv.hi))
        throw std::invalid_argument("indicator symbol: empty interval");
      ivs.push_back(iv);
      pos = rb + 1;
      // separator: 'u', 'U' or the UTF-8 union sign
      while (pos < body.size() && body[pos] != '[') ++pos;
    }
    if (ivs.empty()) throw std::invalid_argument("indicator symbol: no intervals");
    return Symbol::indicator(std::move(ivs));
  }
  if (tag == "exppower") {
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("exppower symbol needs c,alpha: " + text);
    return Symbol::exp_power(std::stod(body.substr(0, comma)),
                             std::stod(body.substr(comma + 1)));
  }
  if (tag == "table") {
    std::ifstream in(body);
    if (!in) throw std::invalid_argument("table symbol: cannot open " + body);
    std::vector<double> xs;
    std::vector<cplx> vals;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string tok;
      std::vector<std::string> cols;
      while (std::getline(ls, tok, ',')) cols.push_back(tok);
      if (cols.empty()) continue;
      // header row detection
      try {
        const double x = std::stod(cols.at(0));
        const double re = cols.size() > 1 ? std::stod(cols.at(1)) : 0.0;
        const double im = cols.size() > 2 ? std::stod(cols.at(2)) : 0.0;
        xs.push_back(x);
        vals.push_back({re, im});
      } catch (const std::exception&) {
        if (xs.empty()) continue;  // skip header
        throw;
      }
    }
    return Symbol::tabulated(std::move(xs), std::move(vals));
  }
  throw std::invalid_argument("unknown symbol tag: " + tag);
}

}  // namespace whlab
