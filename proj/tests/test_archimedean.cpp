#include <doctest.h>

#include <stdexcept>

#include "falt/archimedean.hpp"
#include "falt/gamma.hpp"
#include "falt/quadrature.hpp"

using namespace falt;

namespace {

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("tanh-sinh on closed-form integrals") {
  const Precision bits = 192;
  const Real target = ldexp_one(-176, bits);
  // integral_0^1 t^{-1/2} dt = 2
  auto inv_sqrt = [&](const UnitNode& x) { return exp(-x.log_t / 2); };
  CHECK(abs(tanh_sinh_unit(inv_sqrt, target, bits).value - 2) < ldexp_one(-170, bits));
  // integral_0^1 -log t dt = 1
  auto neg_log = [&](const UnitNode& x) { return -x.log_t; };
  CHECK(abs(tanh_sinh_unit(neg_log, target, bits).value - 1) < ldexp_one(-170, bits));
  // integral_0^1 t^{-29/30} (1-t)^{-1/2} dt = B(1/30, 1/2), the most singular entry at n = 15
  const PrecisionContext ctx(bits);
  auto beta = [&](const UnitNode& x) {
    return exp(Real(Rational(-29, 30), bits) * x.log_t - x.log_one_minus_t / 2);
  };
  const Real q = tanh_sinh_unit(beta, target, bits).value;
  CHECK(rel(log(q), log_beta(Rational(1, 30), Rational(1, 2), ctx)) < ldexp_one(-170, bits));
}

TEST_CASE("tanh-sinh reports non-contraction") {
  auto f = [&](const UnitNode& x) { return exp(Real(Rational(-99, 100), 128) * x.log_t); };
  CHECK_THROWS_AS(tanh_sinh_unit(f, ldexp_one(-120, 128), 128, 2), QuadratureError);
}

TEST_CASE("beta entries") {
  const PrecisionContext ctx(128);
  const Precision wp = ctx.working_bits();
  const Complex a = beta_entry(1, 1, 5, ctx);
  const Real modulus = exp(log_beta(Rational(1, 10), Rational(1, 2), ctx)) * 2 / 5;
  CHECK(rel(a.abs(), modulus) < ctx.function_tolerance());
  CHECK(abs(a.im / a.re - sin(const_pi(wp) / 5) / cos(const_pi(wp) / 5)) < ctx.function_tolerance());
  // n = 2, k = 2: the phase is e^{i pi} = -1 and the modulus is B(1/4, 1/2).
  const Complex w = beta_entry(1, 2, 2, ctx);
  CHECK(w.re < 0);
  CHECK(abs(w.im) < ctx.function_tolerance() * abs(w.re));
  CHECK(rel(w.abs(), exp(log_beta(Rational(1, 4), Rational(1, 2), ctx))) < ctx.function_tolerance());
  CHECK_THROWS_AS((void)beta_entry(3, 1, 5, ctx), std::out_of_range);
  CHECK_THROWS_AS((void)beta_entry(1, 5, 5, ctx), std::out_of_range);
  CHECK_THROWS_AS((void)beta_entry(0, 1, 5, ctx), std::out_of_range);
}

TEST_CASE("quadrature entries match beta entries") {
  const PrecisionContext ctx(192);
  for (std::int64_t n : {5, 7, 9}) {
    const std::int64_t g = n / 2;
    for (int j = 1; j <= g; ++j) {
      for (int k = 1; k <= 2 * g; ++k) {
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(k);
        const Complex b = beta_entry(j, k, n, ctx);
        const Complex q = quadrature_entry(j, k, n, ctx);
        CHECK((q - b).abs() / b.abs() < ctx.quadrature_target() * 10);
      }
    }
  }
}

TEST_CASE("determinant identity") {
  const PrecisionContext ctx(192);
  const Real tol = Real::from_string("1e-20", 224);
  for (std::int64_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15}) {
    CAPTURE(n);
    const std::int64_t g = n / 2;
    const Real numeric = numeric_log_det(n, ctx);
    CHECK(rel(numeric, closed_form_log_det(n, ctx)) < tol);
    // (8g+4) log|det| against -n(4g+2) log n + (16g+8)(g log 2 + (g/2) log pi + S(n))
    const auto& c = ctx.constants();
    const Real rhs = -log_of(n, 224) * (n * (4 * g + 2)) +
                     (c.log_2 * g + c.log_pi * g / 2 + period_gamma_sum(n, ctx)) * (16 * g + 8);
    CHECK(rel(numeric * (8 * g + 4), rhs) < tol);
  }
  CHECK(rel(numeric_log_det(7, ctx, EntryPath::kQuadrature), closed_form_log_det(7, ctx)) < tol);
}

TEST_CASE("lambda norm from the determinant") {
  // log ||Lambda|| = g log|Disc| - 2g(4g+3) log 2 + (4g+2) log|det(A over conj A)|, |Disc| = n^n.
  const PrecisionContext ctx(192);
  for (std::int64_t n : {2, 3, 4, 5, 9, 11}) {
    const std::int64_t g = n / 2;
    const Real via_det = log_of(n, 224) * (g * n) - ctx.constants().log_2 * (2 * g * (4 * g + 3)) +
                         numeric_log_det(n, ctx) * (4 * g + 2);
    CHECK(rel(via_det, log_lambda_norm(n, ctx)) < Real::from_string("1e-40", 224));
  }
}

TEST_CASE("lambda norm expression at several precisions") {
  for (Precision bits : {64, 128, 256}) {
    const PrecisionContext ctx(bits);
    const Real pi = const_pi(bits + 64);
    // n = 3: 6 log pi - 2 log 2 - 6 log 3 + 12 (log Gamma(1/6) - log Gamma(2/3))
    const Real want = log(pi) * 6 - log_of(2, bits + 64) * 2 - log_of(3, bits + 64) * 6 +
                      (log_gamma(Rational(1, 6), ctx) - log_gamma(Rational(2, 3), ctx)) * 12;
    CHECK(abs(log_lambda_norm(3, ctx) - want) < ctx.function_tolerance() * 64);
    CHECK(log_lambda_norm(4, ctx).is_finite());
  }
  CHECK_THROWS_AS(log_lambda_norm(1, PrecisionContext(64)), std::invalid_argument);
}

TEST_CASE("period matrices, bilinear relation and Gram matrix") {
  const PrecisionContext ctx(192);
  for (std::int64_t n : {2, 3, 4, 5, 7, 9}) {
    CAPTURE(n);
    const ComplexMatrix a = period_matrix_a(n, ctx);
    const PeriodMatrices pm = period_matrices(a);
    CHECK(bilinear_residual(pm) < ctx.function_tolerance() * a.max_abs() * a.max_abs());
    const ComplexMatrix gram = gram_matrix(n, ctx);
    CHECK(hermitian_residual(gram) < ctx.function_tolerance() * gram.max_abs());
    CHECK(is_positive_definite(gram, ctx.function_tolerance()));
    // 2^g |det Gram| = |det(A over conj A)|
    const Real lhs = log_determinant(gram).log_abs + ctx.constants().log_2 * (n / 2);
    CHECK(abs(lhs - numeric_log_det(n, ctx)) < ctx.function_tolerance() * 64);
  }
  const ComplexMatrix g5 = gram_matrix(5, ctx);
  CHECK(abs(g5(0, 0).re - Real::from_string("16.6635", 64)) < Real::from_string("1e-4", 64));
  CHECK(abs(g5(1, 1).re - Real::from_string("11.4201", 64)) < Real::from_string("1e-4", 64));
  CHECK(abs(gram_matrix(3, ctx)(0, 0).re - Real::from_string("20.4325", 64)) < Real::from_string("1e-4", 64));
}

TEST_CASE("positive definiteness rejects indefinite and non-Hermitian input") {
  ComplexMatrix m(2, 2, 128);
  m(0, 0) = Complex(Real(1, 128), Real(128));
  m(1, 1) = Complex(Real(-1, 128), Real(128));
  CHECK_FALSE(is_positive_definite(m, ldexp_one(-100, 128)));
  m(1, 1) = Complex(Real(1, 128), Real(128));
  m(0, 1) = Complex(Real(128), Real(1, 128));
  CHECK_FALSE(is_positive_definite(m, ldexp_one(-100, 128)));
}

TEST_CASE("report") {
  const PrecisionContext ctx(128);
  const ArchimedeanReport r = archimedean_report(5, ctx);
  CHECK(r.g == 2);
  CHECK(r.bits == 128);
  CHECK(r.gram_pd);
  CHECK(r.rel_err < Real::from_string("1e-30", 64));
  const std::string s = format_report(r);
  for (const char* key : {"n=5\n", "g=2\n", "bits=128\n", "log_norm_closed=", "log_det_numeric=", "rel_err=",
                          "gram_pd=true\n"}) {
    CHECK(s.find(key) != std::string::npos);
  }
}
