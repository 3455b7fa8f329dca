#include "whlab/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "whlab/complex_text.hpp"

namespace whlab {

namespace {

double max_abs_coeff(const std::vector<cplx>& c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

// Parlett-Reinsch style balancing by powers of two, adapted for a complex
// companion matrix. Improves eigenvalue accuracy for badly scaled
// coefficients.
void balance(Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  const double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double sc = std::ldexp(1.0, exponent);
        const double sr = std::ldexp(1.0, -exponent);
        if (col * sc + row * sr < gamma * (col + row)) {
          changed = true;
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            m(i, j) *= sr;
            m(j, i) *= sc;
          }
        }
      }
    }
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  strip_leading_zeros();
}

void Polynomial::strip_leading_zeros() {
  const double scale = max_abs_coeff(c_);
  const double tol = scale * default_root_config().coeff_rel_tol;
  while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
}

Polynomial Polynomial::identity_x() { return Polynomial({cplx{0.0}, cplx{1.0}}); }

Polynomial Polynomial::from_roots(cplx leading, const std::vector<cplx>& rts) {
  std::vector<cplx> c{leading};
  for (const auto& r : rts) {
    c.push_back(cplx{0.0});
    for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

cplx Polynomial::eval(cplx x) const {
  cplx acc{0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial{};
  std::vector<cplx> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (1.0 / leading());
}

Polynomial Polynomial::conj_reflect() const {
  std::vector<cplx> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(),
                 [](cplx v) { return std::conj(v); });
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> c(std::max(c_.size(), o.c_.size()), cplx{0.0});
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o * cplx{-1.0};
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial{};
  std::vector<cplx> c(c_.size() + o.c_.size() - 1, cplx{0.0});
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> c(c_);
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

bool Polynomial::almost_equal(const Polynomial& o, double rel_tol) const {
  const size_t n = std::max(c_.size(), o.c_.size());
  double scale = std::max(max_abs_coeff(c_), max_abs_coeff(o.c_));
  if (scale == 0.0) return true;
  for (size_t k = 0; k < n; ++k) {
    if (std::abs((*this)[k] - o[k]) > rel_tol * scale) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ",";
    out += format_complex(c_[k]);
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<cplx> c;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    c.push_back(parse_complex(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Polynomial(std::move(c));
}

int RootSplit::total_multiplicity() const {
  return deg_lower() + deg_real() + deg_upper();
}
namespace {
int deg_of(const std::vector<RootMult>& v) {
  int d = 0;
  for (const auto& r : v) d += r.multiplicity;
  return d;
}
Polynomial factor_of(const std::vector<RootMult>& v) {
  std::vector<cplx> rts;
  for (const auto& r : v)
    for (int k = 0; k < r.multiplicity; ++k) rts.push_back(r.root);
  return Polynomial::from_roots(cplx{1.0}, rts);
}
}  // namespace
int RootSplit::deg_lower() const { return deg_of(lower); }
int RootSplit::deg_real() const { return deg_of(real); }
int RootSplit::deg_upper() const { return deg_of(upper); }
Polynomial RootSplit::lower_factor() const { return factor_of(lower); }
Polynomial RootSplit::real_factor() const { return factor_of(real); }
Polynomial RootSplit::upper_factor() const { return factor_of(upper); }

std::vector<RootMult> roots(const Polynomial& p, const RootConfig& cfg) {
  if (p.is_zero()) {
    throw std::invalid_argument("roots: zero polynomial");
  }
  const int deg = p.degree();
  if (deg == 0) return {};

  const Polynomial m = p.monic();
  std::vector<cplx> raw;
  raw.reserve(deg);
  if (deg == 1) {
    raw.push_back(-m[0]);
  } else if (deg == 2) {
    // complex quadratic formula with cancellation-safe branch
    const cplx b = m[1], c0 = m[0];
    const cplx disc = std::sqrt(b * b - 4.0 * c0);
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                           : -0.5 * (b - disc);
    raw.push_back(q);
    raw.push_back(std::abs(q) > 0.0 ? c0 / q : -b - q);
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -m[static_cast<size_t>(i)];
    balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) {
      throw NumericalFailure("roots: companion eigen-solver failed");
    }
    for (int i = 0; i < deg; ++i) raw.push_back(es.eigenvalues()(i));
  }

  // Convergence check on the raw eigenvalues: the companion solve is
  // backward stable, so failure to reproduce the coefficients means the
  // eigen-solver lost the polynomial. (Newton refinement below collapses
  // multiple-root clusters and would spoil this bound.)
  {
    const Polynomial rebuilt = Polynomial::from_roots(p.leading(), raw);
    double scale = 0.0, err = 0.0;
    for (int k = 0; k <= deg; ++k) {
      scale = std::max(scale, std::abs(p[static_cast<size_t>(k)]));
      err = std::max(err, std::abs(p[static_cast<size_t>(k)] -
                                   rebuilt[static_cast<size_t>(k)]));
    }
    if (err > 1e-7 * scale) {
      throw NumericalFailure("roots: eigenvalues do not reproduce input",
                             {err / scale});
    }
  }

  // Newton refinement; multiple roots converge slowly but the cluster
  // radius absorbs that.
  const Polynomial dp = m.derivative();
  for (auto& z : raw) {
    for (int it = 0; it < cfg.newton_steps; ++it) {
      const cplx f = m.eval(z);
      const cplx df = dp.eval(z);
      if (std::abs(df) < 1e-300) break;
      const cplx step = f / df;
      if (!std::isfinite(std::abs(step))) break;
      z -= step;
    }
  }

  // Cluster within radius.
  std::sort(raw.begin(), raw.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<RootMult> out;
  std::vector<bool> used(raw.size(), false);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    cplx sum = raw[i];
    int mult = 1;
    used[i] = true;
    for (size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(raw[j] - sum / double(mult)) <= cfg.cluster_radius) {
        sum += raw[j];
        ++mult;
        used[j] = true;
      }
    }
    out.push_back({sum / double(mult), mult});
  }

  return out;
}

RootSplit half_plane_split(const Polynomial& p, double eps_real,
                           const RootConfig& cfg) {
  RootSplit split;
  split.eps_real = eps_real;
  if (p.is_zero()) throw std::invalid_argument("half_plane_split: zero polynomial");

  for (const auto& r : roots(p, cfg)) {
    const double im = r.root.imag();
    if (std::abs(im) <= eps_real) {
      split.real.push_back({cplx{r.root.real(), 0.0}, r.multiplicity});
    } else if (im > 0) {
      split.upper.push_back(r);
    } else {
      split.lower.push_back(r);
    }
    if (std::abs(im) > eps_real && std::abs(im) <= 10.0 * eps_real) {
      std::ostringstream os;
      os << "ill-conditioned half-plane classification: root " << r.root.real()
         << (im < 0 ? "-" : "+") << std::abs(im) << "i within 10*eps_real of the axis";
      split.warnings.push_back(os.str());
    }
  }

  const Polynomial rebuilt = (split.lower_factor() * split.real_factor() *
                              split.upper_factor()) *
                             p.leading();
  double scale = 0.0, err = 0.0;
  for (int k = 0; k <= p.degree(); ++k) {
    scale = std::max(scale, std::abs(p[static_cast<size_t>(k)]));
    err = std::max(err, std::abs(p[static_cast<size_t>(k)] -
                                 rebuilt[static_cast<size_t>(k)]));
  }
  split.factor_residual = scale > 0 ? err / scale : 0.0;
  return split;
}

CoprimePair reduce_coprime(const Polynomial& P, const Polynomial& Q,
                           const RootConfig& cfg) {
  if (P.is_zero() || Q.is_zero()) {
    throw std::invalid_argument("reduce_coprime: zero polynomial");
  }
  CoprimePair out{P, Q, {}};
  if (P.degree() == 0 || Q.degree() == 0) return out;

  auto rp = roots(P, cfg);
  auto rq = roots(Q, cfg);
  bool cancelled = false;
  for (auto& a : rp) {
    for (auto& b : rq) {
      if (a.multiplicity == 0 || b.multiplicity == 0) continue;
      const double d = std::abs(a.root - b.root);
      if (d <= cfg.cluster_radius) {
        const int m = std::min(a.multiplicity, b.multiplicity);
        a.multiplicity -= m;
        b.multiplicity -= m;
        cancelled = true;
      } else if (d <= 10.0 * cfg.cluster_radius) {
        std::ostringstream os;
        os << "near-common roots of numerator and denominator at distance " << d;
        out.warnings.push_back(os.str());
      }
    }
  }
  if (!cancelled) return out;

  auto expand = [](const std::vector<RootMult>& v, cplx leading) {
    std::vector<cplx> rts;
    for (const auto& r : v)
      for (int k = 0; k < r.multiplicity; ++k) rts.push_back(r.root);
    return Polynomial::from_roots(leading, rts);
  };
  out.p = expand(rp, P.leading());
  out.q = expand(rq, Q.leading());
  return out;
}

}  // namespace whlab
