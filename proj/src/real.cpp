#include "falt/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "falt/gamma.hpp"

namespace falt {

Real::Real(Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value.num(), MPFR_RNDN);
  if (value.den() != 1) mpfr_div_si(v_, v_, value.den(), MPFR_RNDN);
}

Real Real::from_double(double value, Precision bits) {
  Real r(bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::from_string(std::string_view decimal, Precision bits) {
  Real r(bits);
  std::string s(decimal);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("Real: cannot parse '" + s + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(Precision bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void Real::widen_to(Precision bits) {
  if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int len = mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  if (len < 0) throw std::runtime_error("Real: formatting failed");
  if (static_cast<std::size_t>(len) >= buf.size()) {
    buf.resize(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  }
  return std::string(buf.data());
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real unary(const Real& x) {
  Real r(x.precision());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary<mpfr_abs>(x); }
Real sqrt(const Real& x) { return unary<mpfr_sqrt>(x); }
Real log(const Real& x) { return unary<mpfr_log>(x); }
Real log1p(const Real& x) { return unary<mpfr_log1p>(x); }
Real exp(const Real& x) { return unary<mpfr_exp>(x); }
Real expm1(const Real& x) { return unary<mpfr_expm1>(x); }
Real sin(const Real& x) { return unary<mpfr_sin>(x); }
Real cos(const Real& x) { return unary<mpfr_cos>(x); }
Real sinh(const Real& x) { return unary<mpfr_sinh>(x); }
Real cosh(const Real& x) { return unary<mpfr_cosh>(x); }

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real ldexp_one(long e, Precision bits) {
  Real r(1, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real const_pi(Precision bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(Precision bits) {
  Real r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(Precision bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real log_of(std::int64_t n, Precision bits) {
  if (n <= 0) throw std::domain_error("log_of: non-positive argument");
  Real x(bits);
  mpfr_set_si(x.get(), n, MPFR_RNDN);  // exact for |n| < 2^63 at >= 64 bits
  return log(x);
}

Real log_of(const Rational& q, Precision bits) {
  if (q.num() <= 0) throw std::domain_error("log_of: non-positive argument");
  return log_of(q.num(), bits) - log_of(q.den(), bits);
}

PrecisionContext::PrecisionContext(Precision bits)
    : bits_(bits), cache_(std::make_shared<ConstantCache>()) {
  if (bits < 64) throw std::invalid_argument("PrecisionContext: bits must be >= 64");
}

Real PrecisionContext::function_tolerance() const { return ldexp_one(-(bits_ - 8), bits_); }

Real PrecisionContext::quadrature_target() const { return ldexp_one(-(bits_ - 16), bits_); }

Real PrecisionContext::inequality_guard() const { return ldexp_one(-(bits_ / 2), bits_); }

const ConstantCache& PrecisionContext::constants() const {
  cache_->ensure(*this);
  return *cache_;
}

}  // namespace falt
