#include <doctest.h>

#include <random>
#include <stdexcept>

#include "falt/gamma.hpp"
#include "falt/quadrature.hpp"

using namespace falt;

namespace {

// Reference log Gamma from MPFR itself.
Real mpfr_log_gamma(const Real& x, Precision bits) {
  Real xw = x.rounded(bits);
  Real out(bits);
  mpfr_lngamma(out.get(), xw.get(), MPFR_RNDN);
  return out;
}

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / max(Real(1, b.precision()), abs(b)); }

Real ref(const char* s, Precision bits) { return Real::from_string(s, bits); }

// log A from its defining limit:
//   log A = sum_{k<=N} k log k - (N^2/2 + N/2 + 1/12) log N + N^2/4
//           + sum_{m>=2} B_2m / (2m (2m-1) (2m-2)) N^{2-2m}
Real log_glaisher_by_summation(Precision bits) {
  const long n = 200;
  Real s(bits);
  for (long k = 2; k <= n; ++k) {
    Real kk(k, bits);
    s += kk * log(kk);
  }
  const Real nr(n, bits);
  const Real nn = nr * nr;
  Real out = s - (nn / 2 + nr / 2 + Real(Rational(1, 12), bits)) * log(nr) + nn / 4;
  Real npow = 1 / nn;  // N^{2-2m} for m = 2
  for (int m = 2; m < 40; ++m) {
    mpq_class b = bernoulli(2 * m) / mpq_class(2 * m * (2 * m - 1) * (2 * m - 2));
    Real coeff(bits);
    mpfr_set_q(coeff.get(), b.get_mpq_t(), MPFR_RNDN);
    out += coeff * npow;
    npow /= nn;
  }
  return out;
}

// integral_0^z log Gamma(x) dx by tanh-sinh with MPFR's log Gamma.
Real log_gamma_integral_by_quadrature(const Real& z, Precision bits) {
  auto f = [&](const UnitNode& x) { return mpfr_log_gamma(z * x.t, bits) * z; };
  return tanh_sinh_unit(f, ldexp_one(-(bits - 24), bits), bits).value;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(20) == mpq_class(-174611, 330));
}

TEST_CASE("log gamma against mpfr_lngamma") {
  for (Precision bits : {64, 128, 192, 320}) {
    const PrecisionContext ctx(bits);
    std::mt19937_64 rng(bits);
    std::uniform_int_distribution<std::int64_t> num(1, 20000);
    for (int i = 0; i < 60; ++i) {
      const Rational x(num(rng), 997);
      const Real got = log_gamma(x, ctx);
      const Real want = mpfr_log_gamma(Real(x, bits + 64), bits + 64);
      CHECK(rel_diff(got, want) < ctx.function_tolerance());
    }
  }
}

TEST_CASE("log gamma at exact integers and half") {
  const PrecisionContext ctx(128);
  CHECK(log_gamma(Rational(1), ctx).is_zero());
  CHECK(log_gamma(Rational(2), ctx).is_zero());
  const Real half = log_gamma(Rational(1, 2), ctx);
  CHECK(abs(half - log(const_pi(200)) / 2) < ctx.function_tolerance());
  CHECK_THROWS_AS(log_gamma(Rational(0), ctx), std::domain_error);
  CHECK_THROWS_AS(log_gamma(Real(-1, 64), ctx), std::domain_error);
}

TEST_CASE("reflection and recurrence at random rationals") {
  const PrecisionContext ctx(128);
  const Precision wp = ctx.working_bits();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> den(2, 5000);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = den(rng);
    const Rational x(std::uniform_int_distribution<std::int64_t>(1, d - 1)(rng), d);
    const Real xr(x, wp);
    // log Gamma(x) + log Gamma(1-x) = log(pi / sin(pi x))
    const Real lhs = log_gamma(x, ctx) + log_gamma(Rational(1) - x, ctx);
    const Real pi = const_pi(wp);
    CHECK(abs(lhs - log(pi / sin(pi * xr))) < ctx.function_tolerance() * 4);
    // log Gamma(x + 1) = log Gamma(x) + log x
    CHECK(abs(log_gamma(x + Rational(1), ctx) - log_gamma(x, ctx) - log(xr)) <
          ctx.function_tolerance() * max(Real(1, wp), abs(log(xr))) * 4);
  }
}

TEST_CASE("log beta against quadrature") {
  const PrecisionContext ctx(128);
  const Precision wp = ctx.working_bits();
  // B(1/10, 1/2) = integral_0^1 t^{-9/10} (1-t)^{-1/2} dt
  auto f = [&](const UnitNode& x) {
    return exp(Real(Rational(-9, 10), wp) * x.log_t - x.log_one_minus_t / 2);
  };
  const Real quad = tanh_sinh_unit(f, ctx.quadrature_target(), wp).value;
  CHECK(rel_diff(log_beta(Rational(1, 10), Rational(1, 2), ctx), log(quad)) < ctx.function_tolerance());
  // B(1, 1) = 1, B(1/2, 1/2) = pi
  CHECK(abs(log_beta(Rational(1), Rational(1), ctx)) < ctx.function_tolerance());
  CHECK(abs(log_beta(Rational(1, 2), Rational(1, 2), ctx) - log(const_pi(wp))) < ctx.function_tolerance());
}

TEST_CASE("zeta'(-1), log A and zeta'(2) references") {
  const PrecisionContext ctx(160);
  const Real tol = ref("1e-45", 200);
  CHECK(abs(zeta_prime_minus_one(ctx) - ref("-0.1654211437004509292139196602427806427640363803352", 200)) < tol);
  CHECK(abs(log_glaisher(ctx) - ref("0.24875447703378426254725299357611397609736971366853", 200)) < tol);
  CHECK(abs(zeta_prime_two(ctx) - ref("-0.9375482543158437537025740945678649778978602886148299259", 200)) < tol);
  CHECK(abs(log_barnes_g_half(ctx) - ref("-0.5054330544896953827976849898083449517213991014666199328", 200)) <
        tol);
  CHECK(abs(gamma_sum_slope(ctx) - ref("0.68850116605469067852365630394016054761915079647559", 200)) < tol);
}

TEST_CASE("log A by direct summation") {
  const PrecisionContext ctx(128);
  CHECK(abs(log_glaisher(ctx) - log_glaisher_by_summation(256)) < ctx.function_tolerance());
}

TEST_CASE("constants are stable under precision doubling") {
  for (Precision bits : {64, 128, 256}) {
    const PrecisionContext lo(bits), hi(2 * bits);
    CHECK(abs(zeta_prime_minus_one(lo) - zeta_prime_minus_one(hi)) < lo.function_tolerance());
    CHECK(abs(log_barnes_g_half(lo) - log_barnes_g_half(hi)) < lo.function_tolerance());
    CHECK(abs(gamma_sum_slope(lo) - gamma_sum_slope(hi)) < lo.function_tolerance());
  }
}

TEST_CASE("integral of log gamma") {
  const PrecisionContext ctx(96);
  const Precision bits = 160;
  CHECK(abs(log_gamma_integral(Rational(1), ctx) - log_gamma_integral_by_quadrature(Real(1, bits), bits)) <
        ctx.function_tolerance());
  CHECK(abs(log_gamma_integral(Rational(1, 2), ctx) -
            log_gamma_integral_by_quadrature(Real(Rational(1, 2), bits), bits)) < ctx.function_tolerance());
  CHECK(abs(log_gamma_integral(Rational(1, 2), ctx) - ref("0.8037198496296817101519930201728890937402741350566837463", 128)) <
        ctx.function_tolerance());
  CHECK_THROWS_AS(log_gamma_integral(Rational(1, 3), ctx), std::domain_error);
}

TEST_CASE("head bound dominates the integral near zero") {
  const PrecisionContext ctx(96);
  for (std::int64_t n : {3, 5, 11, 101, 1001}) {
    const Real z(Rational(1, 2 * n), 160);
    CHECK(log_gamma_integral_by_quadrature(z, 160) < log_gamma_integral_head_bound(n, ctx));
  }
}

TEST_CASE("gamma ratio sums") {
  const PrecisionContext ctx(128);
  CHECK(abs(gamma_ratio_sum(5, ctx) - ref("2.798217110083208993151722966047154323983368605506983293", 200)) <
        ctx.function_tolerance());
  for (std::int64_t n : {3, 7, 21, 99, 1001}) {
    Real want(224);
    for (std::int64_t j = 1; j <= (n - 1) / 2; ++j) {
      want += mpfr_log_gamma(Real(Rational(2 * j - 1, 2 * n), 224), 224) -
              mpfr_log_gamma(Real(Rational(n + 2 * j - 1, 2 * n), 224), 224);
    }
    CHECK(rel_diff(gamma_ratio_sum(n, ctx), want) < ctx.function_tolerance() * 4);
    CHECK(period_gamma_sum(n, ctx) == gamma_ratio_sum(n, ctx));
  }
  // Even n: g = n/2 terms, the last one being log Gamma(1/2 - 1/(2n)) - log Gamma(1 - 1/(2n)).
  const Real two = period_gamma_sum(2, ctx);
  CHECK(rel_diff(two, mpfr_log_gamma(Real(Rational(1, 4), 224), 224) - mpfr_log_gamma(Real(Rational(3, 4), 224), 224)) <
        ctx.function_tolerance());
  CHECK_THROWS_AS(gamma_ratio_sum(4, ctx), std::domain_error);
  CHECK_THROWS_AS(period_gamma_sum(1, ctx), std::domain_error);
}
