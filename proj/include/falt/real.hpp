#pragma once

// Configurable-precision binary floating point (MPFR) and the precision
// context that every analytic routine takes.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "falt/exact.hpp"

namespace falt {

using Precision = mpfr_prec_t;

/// Owning MPFR value. Binary operations produce a result at the larger of the
/// two operand precisions, rounded to nearest.
class Real {
 public:
  explicit Real(Precision bits = 128);
  Real(long value, Precision bits);
  Real(const Rational& value, Precision bits);
  static Real from_double(double value, Precision bits);
  static Real from_string(std::string_view decimal, Precision bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to `bits`.
  Real rounded(Precision bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Round-to-nearest decimal with `digits` significant digits.
  std::string to_string(int digits) const;

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; x must be nonzero.
  long exponent() const { return mpfr_get_exp(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  void widen_to(Precision bits);

  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
/// 2^e at the given precision.
Real ldexp_one(long e, Precision bits);

Real const_pi(Precision bits);
Real const_log2(Precision bits);
Real const_euler(Precision bits);

/// log of a positive integer, or of an exact positive rational.
Real log_of(std::int64_t n, Precision bits);
Real log_of(const Rational& q, Precision bits);

struct ConstantCache;

/// Target precision plus the derived tolerances and per-context memoized
/// constants. Copies share the memo table; it is filled at most once.
class PrecisionContext {
 public:
  static constexpr Precision kGuardBits = 32;
  static constexpr Precision kDefaultBits = 128;

  explicit PrecisionContext(Precision bits = kDefaultBits);

  Precision bits() const { return bits_; }
  /// Internal working precision: bits + guard.
  Precision working_bits() const { return bits_ + kGuardBits; }
  /// 2^{-(bits - 8)}: relative accuracy promised by the special functions.
  Real function_tolerance() const;
  /// Relative target for tanh-sinh quadrature: 2^{-(bits - 16)}.
  Real quadrature_target() const;
  /// 2^{-bits/2}: minimum clearance for a strict inequality verdict.
  Real inequality_guard() const;

  const ConstantCache& constants() const;

 private:
  Precision bits_;
  std::shared_ptr<ConstantCache> cache_;
};

}  // namespace falt
