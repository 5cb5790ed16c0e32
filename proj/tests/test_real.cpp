#include <doctest.h>

#include <stdexcept>

#include "falt/gamma.hpp"
#include "falt/real.hpp"

using namespace falt;

TEST_CASE("mixed precision takes the wider operand") {
  const Real a(1, 64);
  const Real b(3, 256);
  CHECK((a / b).precision() == 256);
  CHECK((a + 1).precision() == 64);
}

TEST_CASE("exact rational conversion and printing") {
  const Real third(Rational(1, 3), 200);
  CHECK(abs(third * 3 - 1) < ldexp_one(-198, 200));
  CHECK(Real(Rational(5, 4), 64).to_string(5) == "1.25");
  CHECK(Real::from_string("-2.5", 64).to_double() == -2.5);
  CHECK_THROWS(Real::from_string("abc", 64));
}

TEST_CASE("elementary functions") {
  const Precision bits = 160;
  const Real x = Real::from_string("0.37", bits);
  CHECK(abs(exp(log(x)) - x) < ldexp_one(-150, bits));
  CHECK(abs(log1p(expm1(x)) - x) < ldexp_one(-150, bits));
  CHECK(abs(sin(x) * sin(x) + cos(x) * cos(x) - 1) < ldexp_one(-150, bits));
  CHECK(abs(cosh(x) * cosh(x) - sinh(x) * sinh(x) - 1) < ldexp_one(-150, bits));
  CHECK(abs(pow(x, 3) - x * x * x) < ldexp_one(-150, bits));
  CHECK(abs(log_of(Rational(9, 4), bits) - 2 * (log_of(3, bits) - log_of(2, bits))) < ldexp_one(-150, bits));
}

TEST_CASE("precision context tolerances are functions of bits") {
  CHECK_THROWS_AS(PrecisionContext(32), std::invalid_argument);
  const PrecisionContext ctx(128);
  CHECK(ctx.working_bits() == 160);
  CHECK(ctx.function_tolerance() == ldexp_one(-120, 64));
  CHECK(ctx.quadrature_target() == ldexp_one(-112, 64));
  CHECK(ctx.inequality_guard() == ldexp_one(-64, 64));
}

TEST_CASE("copies share one memo table") {
  const PrecisionContext ctx(96);
  const PrecisionContext copy = ctx;
  CHECK(&ctx.constants() == &copy.constants());
  CHECK(ctx.constants().pi.precision() == ctx.working_bits());
  CHECK(abs(ctx.constants().pi - const_pi(200)) < ldexp_one(-120, 200));
}
