#include <cmath>
#include <limits>

#include "doctest.h"
#include "whlab/essential_range.hpp"
#include "whlab/properness.hpp"
#include "whlab/symbol.hpp"

using namespace whlab;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Symbol lalescu() {
  return Symbol::rational(Polynomial::constant(2.0), Polynomial::parse("1,0,1"));
}

}  // namespace

TEST_CASE("symbol eval") {
  // 2/(1+x^2) at 1 -> 1
  CHECK(std::abs(lalescu().eval(1.0).value - cplx{1.0}) < 1e-15);
  // indicator([0,1]) at 2 -> 0
  const Symbol ind = Symbol::indicator({{0.0, 1.0}});
  CHECK(ind.eval(2.0).value == cplx{0.0});
  CHECK(ind.eval(0.5).value == cplx{1.0});
  // exp(|x|) at -3 -> e^3
  CHECK(std::abs(Symbol::exp_power(1.0, 1.0).eval(-3.0).value -
                 cplx{std::exp(3.0)}) < 1e-12);
  // pole marker at real zeros of the denominator
  const Symbol inv_x = Symbol::rational(Polynomial::constant(1.0),
                                        Polynomial::identity_x());
  CHECK(inv_x.eval(0.0).pole);
  CHECK(!inv_x.eval(0.5).pole);
  CHECK_THROWS_AS(inv_x.eval(std::nan("")), std::invalid_argument);
}

TEST_CASE("symbol eval: composites and one-sided exponential") {
  const Symbol e_x = Symbol::one_sided_exp(1.0);
  for (double x : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
    CHECK(std::abs(e_x.eval(x).value - cplx{std::exp(x)}) < 1e-12);
  }
  const Symbol s = Symbol::sum(Symbol::scaled(2.0, lalescu()),
                               Symbol::constant(1.0));
  CHECK(std::abs(s.eval(1.0).value - cplx{3.0}) < 1e-14);
}

TEST_CASE("symbol parsing grammar") {
  const Symbol r = parse_symbol("rational:2/1,0,1");
  CHECK(r.is_rational());
  CHECK(std::abs(r.eval(1.0).value - cplx{1.0}) < 1e-15);

  const Symbol ind = parse_symbol("indicator:[0,1]u[2,3]");
  CHECK(ind.eval(2.5).value == cplx{1.0});
  CHECK(ind.eval(1.5).value == cplx{0.0});

  const Symbol ep = parse_symbol("exppower:1,-0.5");
  CHECK(std::abs(ep.eval(4.0).value - cplx{std::exp(0.5)}) < 1e-14);

  CHECK_THROWS_AS(parse_symbol("bogus:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("rational:1,0,1"), std::invalid_argument);
}

TEST_CASE("properness: analytic certificates and quadrature") {
  // any rational symbol is proper
  auto v = properness_test(lalescu());
  CHECK(v.verdict == Properness::Proper);
  CHECK(std::isfinite(v.integral_estimate));

  v = properness_test(Symbol::rational(Polynomial::parse("0,0,1"),
                                       Polynomial::parse("1")));  // x^2
  CHECK(v.verdict == Properness::Proper);

  // e^{|x|} grows exponentially on both sides
  v = properness_test(Symbol::exp_power(1.0, 1.0));
  CHECK(v.verdict == Properness::NotProper);
  CHECK(v.integral_estimate == kInf);

  // one-sided exponential e^x
  v = properness_test(Symbol::one_sided_exp(1.0));
  CHECK(v.verdict == Properness::NotProper);

  // exp(|x|^{-1/2}): integrable singularity at 0
  v = properness_test(Symbol::exp_power(1.0, -0.5));
  CHECK(v.verdict == Properness::Proper);

  // exp(|x|^{1/2}): subexponential growth
  v = properness_test(Symbol::exp_power(1.0, 0.5));
  CHECK(v.verdict == Properness::Proper);

  // exp(|x|^{-3/2}): the log-integral diverges at the origin
  v = properness_test(Symbol::exp_power(1.0, -1.5));
  CHECK(v.verdict == Properness::NotProper);
}

TEST_CASE("properness: integral estimates stable under refinement") {
  for (double alpha : {0.5, -0.5}) {
    const Symbol s = Symbol::exp_power(1.0, alpha);
    PropernessConfig coarse{1e-8, 1e2};
    PropernessConfig fine{1e-11, 1e2};
    const auto a = properness_test(s, coarse);
    const auto b = properness_test(s, fine);
    CHECK(std::abs(a.integral_estimate - b.integral_estimate) < 1e-6);
    CHECK(b.error_estimate < 1e-6);
  }
}

TEST_CASE("properness: undersampled tables are inconclusive") {
  const Symbol t = Symbol::tabulated({0.0, 1.0, 2.0}, {1.0, 2.0, 1.0});
  const auto v = properness_test(t);
  CHECK(v.verdict == Properness::Inconclusive);

  std::vector<double> xs;
  std::vector<cplx> vals;
  for (int i = 0; i <= 64; ++i) {
    xs.push_back(-8.0 + 0.25 * i);
    vals.push_back(std::exp(-std::abs(xs.back())));
  }
  const auto ok = properness_test(Symbol::tabulated(xs, vals));
  CHECK(ok.verdict == Properness::Proper);
}

TEST_CASE("properness: monotone in |kappa| on the built-in families") {
  // families ordered by pointwise modulus on a test grid
  const std::vector<Symbol> family = {
      Symbol::indicator({{0.0, 1.0}}),
      lalescu(),
      Symbol::constant(2.0),
      Symbol::exp_power(0.5, 0.5),
      Symbol::exp_power(1.0, 0.5),
  };
  std::vector<PropernessVerdict> verdicts;
  for (const auto& s : family) verdicts.push_back(properness_test(s));
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      bool dominated = true;
      for (double x = -40.0; x <= 40.0; x += 0.125) {
        const auto vi = family[i].eval(x);
        const auto vj = family[j].eval(x);
        if (std::abs(vi.value) > std::abs(vj.value) + 1e-12) {
          dominated = false;
          break;
        }
      }
      if (dominated && verdicts[j].verdict == Properness::Proper) {
        CHECK(verdicts[i].verdict == Properness::Proper);
        CHECK(verdicts[i].integral_estimate <=
              verdicts[j].integral_estimate + 1e-9);
      }
    }
  }
}

TEST_CASE("properness: products and sums of proper symbols stay proper") {
  const std::vector<Symbol> proper = {
      lalescu(), Symbol::indicator({{-1.0, 3.0}}), Symbol::exp_power(1.0, 0.5)};
  for (const auto& a : proper) {
    for (const auto& b : proper) {
      CHECK(properness_test(Symbol::product(a, b)).verdict == Properness::Proper);
      CHECK(properness_test(Symbol::sum(a, b)).verdict == Properness::Proper);
    }
  }
}

TEST_CASE("essential range membership") {
  // range of 2/(1+x^2) is (0, 2]; closure adds 0
  auto m = essential_range_membership(lalescu(), 3.0, 1e-9);
  CHECK(!m.member);
  CHECK(m.distance == doctest::Approx(1.0).epsilon(1e-6));

  m = essential_range_membership(lalescu(), 1.0, 1e-9);
  CHECK(m.member);
  CHECK(m.distance < 1e-9);

  // constant symbol
  m = essential_range_membership(Symbol::constant(1.0), 1.0, 1e-9);
  CHECK(m.member);

  // limit value at infinity is part of the closure
  m = essential_range_membership(lalescu(), 0.0, 1e-9);
  CHECK(m.member);

  // borderline distances warn
  m = essential_range_membership(lalescu(), cplx{1.0, 1.5e-7}, 1e-7);
  CHECK(!m.member);
  CHECK(!m.warnings.empty());
}

TEST_CASE("real symbol range analytics") {
  auto r = real_symbol_range(lalescu());
  CHECK(r.bounded_below);
  CHECK(r.bounded_above);
  CHECK(r.inf == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(r.sup == doctest::Approx(2.0).epsilon(1e-6));

  // x: unbounded both ways
  r = real_symbol_range(Symbol::rational(Polynomial::identity_x(),
                                         Polynomial::constant(1.0)));
  CHECK(!r.bounded_below);
  CHECK(!r.bounded_above);

  // x^2 - 1: min -1, unbounded above
  r = real_symbol_range(Symbol::rational(Polynomial::parse("-1,0,1"),
                                         Polynomial::constant(1.0)));
  CHECK(r.bounded_below);
  CHECK(!r.bounded_above);
  CHECK(r.inf == doctest::Approx(-1.0).epsilon(1e-9));

  // 1/x: simple real pole, unbounded both ways
  r = real_symbol_range(Symbol::rational(Polynomial::constant(1.0),
                                         Polynomial::identity_x()));
  CHECK(!r.bounded_below);
  CHECK(!r.bounded_above);

  // 1/x^2: even-order pole, blows up only upward
  r = real_symbol_range(Symbol::rational(Polynomial::constant(1.0),
                                         Polynomial::parse("0,0,1")));
  CHECK(r.bounded_below);
  CHECK(!r.bounded_above);
}
