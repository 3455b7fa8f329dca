#include <algorithm>
#include <random>

#include "doctest.h"
#include "whlab/complex_text.hpp"
#include "whlab/polynomial.hpp"

using namespace whlab;

namespace {

const cplx I{0.0, 1.0};

bool has_root(const std::vector<RootMult>& rs, cplx want, int mult,
              double tol = 1e-7) {
  return std::any_of(rs.begin(), rs.end(), [&](const RootMult& r) {
    return std::abs(r.root - want) < tol && r.multiplicity == mult;
  });
}

}  // namespace

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("1") == cplx{1.0, 0.0});
  CHECK(parse_complex("-2e-3") == cplx{-2e-3, 0.0});
  CHECK(parse_complex("3i") == cplx{0.0, 3.0});
  CHECK(parse_complex("1+2i") == cplx{1.0, 2.0});
  CHECK(parse_complex("1.5e-3-2.5e-4i") == cplx{1.5e-3, -2.5e-4});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK_THROWS_AS(parse_complex("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  // round trip
  for (cplx z : {cplx{0.25, -3.5}, cplx{-1.0, 0.0}, cplx{0.0, 1e-9}}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("polynomial text format") {
  // 1,0,1 is 1 + x^2
  const Polynomial p = Polynomial::parse("1,0,1");
  CHECK(p.degree() == 2);
  CHECK(p.eval(2.0) == cplx{5.0, 0.0});
  const Polynomial q = Polynomial::parse("-1,0,1");  // x^2 - 1
  CHECK(q.eval(1.0) == cplx{0.0, 0.0});
  CHECK(Polynomial::parse(p.to_string()).almost_equal(p));
}

TEST_CASE("roots: analytic factorizations") {
  // x^2 + 1 -> {i, -i}
  auto r = roots(Polynomial::parse("1,0,1"));
  REQUIRE(r.size() == 2);
  CHECK(has_root(r, I, 1));
  CHECK(has_root(r, -I, 1));

  // x - i -> {i}
  r = roots(Polynomial({-I, 1.0}));
  REQUIRE(r.size() == 1);
  CHECK(has_root(r, I, 1));

  // constant -> empty
  CHECK(roots(Polynomial::constant(3.0)).empty());
  CHECK_THROWS_AS(roots(Polynomial{}), std::invalid_argument);
}

TEST_CASE("roots: quadratic-formula oracle for x^2 - ix - 1") {
  // roots (+-sqrt(3) + i)/2 from the quadratic formula; back-substitution
  // confirms them
  const Polynomial p({-1.0, -I, 1.0});
  const cplx r1 = (std::sqrt(3.0) + I) / 2.0;
  const cplx r2 = (-std::sqrt(3.0) + I) / 2.0;
  CHECK(std::abs(p.eval(r1)) < 1e-14);
  CHECK(std::abs(p.eval(r2)) < 1e-14);
  auto r = roots(p);
  REQUIRE(r.size() == 2);
  CHECK(has_root(r, r1, 1));
  CHECK(has_root(r, r2, 1));
}

TEST_CASE("roots: double roots cluster to one multiplicity-2 root") {
  // (x - (1+i))^2 (x + 2); a double root splays by ~sqrt(eps), well inside
  // the cluster radius
  const cplx a{1.0, 1.0};
  const Polynomial p = Polynomial::from_roots(1.0, {a, a, -2.0});
  auto r = roots(p);
  REQUIRE(r.size() == 2);
  CHECK(has_root(r, a, 2, 1e-6));
  CHECK(has_root(r, -2.0, 1));
}

TEST_CASE("roots: triple roots may splay but keep half-plane degrees") {
  // a triple root is only determined to ~eps^{1/3} in doubles; the split
  // still books all three in the correct half-plane
  const cplx a{1.0, 1.0};
  const Polynomial p = Polynomial::from_roots(1.0, {a, a, a, -2.0});
  auto s = half_plane_split(p, 1e-9);
  CHECK(s.deg_upper() == 3);
  CHECK(s.deg_real() == 1);
  CHECK(s.deg_lower() == 0);
}

TEST_CASE("half_plane_split: examples") {
  // x^2 + 1: lower {-i}, real {}, upper {i}
  auto s = half_plane_split(Polynomial::parse("1,0,1"), 1e-9);
  CHECK(s.deg_lower() == 1);
  CHECK(s.deg_real() == 0);
  CHECK(s.deg_upper() == 1);
  CHECK(has_root(s.lower, -I, 1));
  CHECK(has_root(s.upper, I, 1));
  CHECK(s.warnings.empty());

  // x^2 - 1: real {1, -1}
  s = half_plane_split(Polynomial::parse("-1,0,1"), 1e-9);
  CHECK(s.deg_real() == 2);
  CHECK(s.deg_lower() == 0);
  CHECK(s.deg_upper() == 0);

  // x^2 - ix - 1: both roots upper (Im = 1/2)
  s = half_plane_split(Polynomial({-1.0, -I, 1.0}), 1e-9);
  CHECK(s.deg_upper() == 2);
  CHECK(s.deg_lower() == 0);
  CHECK(s.deg_real() == 0);
}

TEST_CASE("half_plane_split: near-axis warning band") {
  // root at 5e-9 i with eps_real 1e-9 sits in (eps, 10 eps]
  const Polynomial p({cplx{0.0, -5e-9}, 1.0});  // x - 5e-9 i
  auto s = half_plane_split(p, 1e-9);
  CHECK(s.deg_upper() == 1);
  CHECK(!s.warnings.empty());

  // root exactly classified real when |Im| <= eps
  auto s2 = half_plane_split(Polynomial({cplx{0.0, -5e-10}, 1.0}), 1e-9);
  CHECK(s2.deg_real() == 1);
}

TEST_CASE("half_plane_split: random refactorization property") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.2, 3.0);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> rts;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      rts.push_back({re(rng), (sign(rng) ? 1.0 : -1.0) * im(rng)});
    }
    const Polynomial p = Polynomial::from_roots(cplx{re(rng), re(rng)}, rts);
    auto s = half_plane_split(p, 1e-9);
    CHECK(s.total_multiplicity() == d);
    CHECK(s.factor_residual < 1e-8);
    const Polynomial rebuilt =
        s.lower_factor() * s.real_factor() * s.upper_factor() * p.leading();
    CHECK(rebuilt.almost_equal(p, 1e-8));
  }
}

TEST_CASE("conj_reflect") {
  // ix + 1 -> -ix + 1
  const Polynomial p({1.0, I});
  CHECK(p.conj_reflect().almost_equal(Polynomial({1.0, -I})));
  // real coefficients fixed
  const Polynomial q = Polynomial::parse("1,0,1");
  CHECK(q.conj_reflect().almost_equal(q));
  // x - i -> x + i
  CHECK(Polynomial({-I, 1.0}).conj_reflect().almost_equal(Polynomial({I, 1.0})));
}

TEST_CASE("conj_reflect: involution and root mirroring") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> c;
    for (int k = 0; k < 5; ++k) c.push_back({u(rng), u(rng)});
    c.push_back({1.0, 0.5});
    const Polynomial p(c);
    CHECK(p.conj_reflect().conj_reflect().almost_equal(p));
    auto rp = roots(p);
    auto rr = roots(p.conj_reflect());
    for (const auto& r : rp) {
      CHECK(has_root(rr, std::conj(r.root), r.multiplicity, 1e-6));
    }
  }
}

TEST_CASE("reduce_coprime: examples") {
  // (x^2 - 1, x - 1) -> (x + 1, 1)
  auto pair = reduce_coprime(Polynomial::parse("-1,0,1"), Polynomial::parse("-1,1"));
  CHECK(pair.p.almost_equal(Polynomial::parse("1,1"), 1e-9));
  CHECK(pair.q.degree() == 0);

  // already coprime: unchanged
  pair = reduce_coprime(Polynomial::identity_x(), Polynomial::constant(1.0));
  CHECK(pair.p.almost_equal(Polynomial::identity_x()));
  CHECK(pair.q.almost_equal(Polynomial::constant(1.0)));

  // ((x-i)(x+2), (x-i)) -> (x+2, 1): constructed common factor
  const Polynomial num = Polynomial::from_roots(1.0, {I, -2.0});
  const Polynomial den = Polynomial::from_roots(1.0, {I});
  pair = reduce_coprime(num, den);
  CHECK(pair.p.almost_equal(Polynomial::parse("2,1"), 1e-9));
  CHECK(pair.q.degree() == 0);
}

TEST_CASE("reduce_coprime: idempotent, preserves the ratio") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx shared{u(rng), u(rng) + 2.5};
    const Polynomial p = Polynomial::from_roots(cplx{u(rng), 0.0} + 2.0,
                                                {shared, {u(rng), u(rng)}});
    const Polynomial q =
        Polynomial::from_roots(1.0, {shared, {u(rng), u(rng) - 2.5}});
    auto once = reduce_coprime(p, q);
    auto twice = reduce_coprime(once.p, once.q);
    CHECK(once.p.almost_equal(twice.p));
    CHECK(once.q.almost_equal(twice.q));
    // same rational function at a test point away from roots
    const cplx x0{0.123, 0.0};
    const cplx before = p.eval(x0) / q.eval(x0);
    const cplx after = once.p.eval(x0) / once.q.eval(x0);
    CHECK(std::abs(before - after) < 1e-7 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("reduce_coprime: near-common roots warn") {
  const cplx a{1.0, 1.0};
  const cplx b = a + cplx{5e-7, 0.0};  // within (radius, 10*radius]
  auto pair = reduce_coprime(Polynomial::from_roots(1.0, {a}),
                             Polynomial::from_roots(1.0, {b}));
  CHECK(!pair.warnings.empty());
  CHECK(pair.p.degree() == 1);
  CHECK(pair.q.degree() == 1);
}
