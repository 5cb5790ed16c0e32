#include <doctest.h>

#include <stdexcept>

#include "falt/cluster.hpp"
#include "falt/gamma.hpp"
#include "falt/height.hpp"

using namespace falt;

namespace {

Real close_tol(const char* s) { return Real::from_string(s, 64); }

// Independent assembly with MPFR's own log-gamma.
Real height_oracle(std::int64_t n, Precision bits) {
  Real s(bits);
  for (std::int64_t j = 1; j <= (n - 1) / 2; ++j) {
    Real a(Rational(2 * j - 1, 2 * n), bits);
    Real b(Rational(n + 2 * j - 1, 2 * n), bits);
    Real la(bits), lb(bits);
    mpfr_lngamma(la.get(), a.get(), MPFR_RNDN);
    mpfr_lngamma(lb.get(), b.get(), MPFR_RNDN);
    s += la - lb;
  }
  Real fin(bits);
  for (const auto& [p, e] : factorize(n)) {
    const Rational c(ipow(p, 2 * e) - 1, ipow(p, 2 * e - 1) * (p * p - 1));
    fin += Real(c, bits) * log_of(p, bits);
  }
  const long g = (n - 1) / 2;
  return fin * n / 8 + log_of(n, bits) * n / 8 - log(const_pi(bits)) * g / 2 +
         log_of(2, bits) * g / (2 * n) - s;
}

}  // namespace

TEST_CASE("finite place coefficients") {
  const auto t9 = finite_place_terms(9);
  REQUIRE(t9.size() == 1);
  CHECK(t9[0].prime == 3);
  CHECK(t9[0].exponent == 2);
  CHECK(t9[0].coefficient == Rational(10, 27));
  const PrecisionContext ctx(128);
  // (9/8)(10/27) log 3 = (5/12) log 3
  CHECK(abs(finite_place_sum(9, ctx) - log_of(3, 160) * 5 / 12) < ctx.function_tolerance());
  for (std::int64_t p : {3, 5, 7, 101, 6007}) {
    const auto t = finite_place_terms(p);
    REQUIRE(t.size() == 1);
    CHECK(t[0].coefficient == Rational(1, p));
    CHECK(abs(finite_place_sum(p, ctx) - log_of(p, 160) / 8) < ctx.function_tolerance());
  }
  const auto t15 = finite_place_terms(15);
  REQUIRE(t15.size() == 2);
  CHECK(t15[0].coefficient == Rational(1, 3));
  CHECK(t15[1].coefficient == Rational(1, 5));
  for (std::int64_t n = 3; n < 400; n += 2) {
    for (const auto& term : finite_place_terms(n)) {
      CHECK(term.coefficient == finite_coefficient(n, term.prime));
    }
  }
  CHECK_THROWS_AS(finite_place_terms(4), std::invalid_argument);
  CHECK_THROWS_AS(finite_place_terms(1), std::invalid_argument);
  CHECK_THROWS_AS(faltings_height(10, ctx), std::invalid_argument);
}

TEST_CASE("height matches an independent assembly") {
  for (Precision bits : {64, 128, 256}) {
    const PrecisionContext ctx(bits);
    for (std::int64_t n : {3, 5, 9, 15, 27, 45, 225, 1001}) {
      CAPTURE(n);
      CAPTURE(bits);
      const HeightBreakdown h = faltings_height(n, ctx);
      CHECK(h.genus == (n - 1) / 2);
      const Real oracle = height_oracle(n, bits + 64);
      CHECK(abs(h.total - oracle) < ctx.function_tolerance() * max(Real(1, 64), abs(oracle)) * 16);
      const Real parts = h.finite_sum + h.log_n_term + h.pi_term + h.two_term + h.gamma_term;
      CHECK(abs(parts - h.total) < ctx.function_tolerance() * max(Real(1, 64), abs(h.total)));
    }
  }
}

TEST_CASE("both assemblies agree") {
  const PrecisionContext ctx(192);
  for (std::int64_t n = 3; n < 300; n += 2) {
    CAPTURE(n);
    const HeightBreakdown h = faltings_height(n, ctx);
    const Real other = height_from_lambda(n, gamma_ratio_sum(n, ctx), ctx);
    CHECK(abs(other - h.total) < ldexp_one(-170, 64) * max(Real(1, 64), abs(h.total)));
  }
}

TEST_CASE("genus one agrees with the elliptic value") {
  const PrecisionContext ctx(192);
  const DeligneCheck d = deligne_check(ctx);
  CHECK(abs(d.formula_value - d.deligne_value) < close_tol("1e-50"));
  CHECK(abs(d.formula_value - Real::from_string("-1.3211174284280379149898691958548234637698697536133", 224)) <
        close_tol("1e-48"));
  CHECK(faltings_height(3, ctx).total.to_string(45) == "-1.32111742842803791498986919585482346376986975");
}

TEST_CASE("Gamma(1/6) duplication and reflection") {
  // Gamma(1/6) = sqrt(3/pi) Gamma(1/3)^2 / 2^{1/3}
  const PrecisionContext ctx(256);
  const Precision wp = ctx.working_bits();
  const Real lhs = log_gamma(Rational(1, 6), ctx);
  const Real rhs = (log_of(3, wp) - log(const_pi(wp))) / 2 + log_gamma(Rational(1, 3), ctx) * 2 - log_of(2, wp) / 3;
  CHECK(abs(lhs - rhs) < ctx.function_tolerance() * 4);
}

TEST_CASE("CM comparison quantities") {
  const PrecisionContext ctx(128);
  const Precision wp = ctx.working_bits();
  const Real log_pi_sqrt2 = log(const_pi(wp)) + log_of(2, wp) / 2;
  for (std::int64_t p : {3, 5, 7, 11, 13, 6007}) {
    const HeightBreakdown h = faltings_height(p, ctx);
    CHECK(cm_height_bounds(h, ctx).remond_bound == h.total);
  }
  const HeightBreakdown h9 = faltings_height(9, ctx);
  CHECK(abs(cm_height_bounds(h9, ctx).remond_bound - h9.total - log_pi_sqrt2) < ctx.function_tolerance());
  for (std::int64_t n : {15, 45, 105, 225}) {
    const HeightBreakdown h = faltings_height(n, ctx);
    const Real extra = log_pi_sqrt2 * (n - 1 - euler_phi(n)) / 2;
    const CmHeightBounds b = cm_height_bounds(n, ctx);
    CHECK(abs(b.remond_bound - h.total - extra) < ctx.function_tolerance() * n);
    const Real ln = log_of(n, wp);
    const Real cor = ln * n / 8 + Real(Rational(9, 64), wp) * n * log(ln) - Real(Rational(136, 1000), wp) * n;
    CHECK(abs(b.corollary_bound - cor) < ctx.function_tolerance() * n);
  }
}
