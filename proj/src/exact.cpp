#include "falt/exact.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace falt {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v, const char* op) {
  if (v > kMax || v < kMin) {
    throw OverflowError(std::string("int64 overflow in ") + op);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rational: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num, "Rational numerator");
  r.den_ = narrow(den, "Rational denominator");
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so the 128-bit products stay small.
  __int128 g1 = gcd128(a.num_, b.den_);
  __int128 g2 = gcd128(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = (a.num_ / g1) * (b.num_ / g2);
  __int128 d = (a.den_ / g2) * (b.den_ / g1);
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!is_prime(factors_[i].prime) || factors_[i].exponent < 1) {
      throw std::invalid_argument("PrimeFactorization: bad entry");
    }
    if (i > 0 && factors_[i].prime <= factors_[i - 1].prime) {
      throw std::invalid_argument("PrimeFactorization: primes not increasing");
    }
  }
}

std::int64_t PrimeFactorization::value() const {
  std::int64_t v = 1;
  for (const auto& f : factors_) {
    v = narrow(static_cast<__int128>(v) * ipow(f.prime, f.exponent), "factorization value");
  }
  return v;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(gcd128(a, b));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFactorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  std::vector<PrimePower> out;
  auto strip = [&](std::int64_t d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.push_back({d, e});
  };
  strip(2);
  for (std::int64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) out.push_back({n, 1});
  return PrimeFactorization(std::move(out));
}

int ord_p(std::int64_t n, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("ord_p: n must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("ord_p: p must be prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  std::int64_t phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    phi *= ipow(p, e - 1) * (p - 1);
  }
  return phi;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    narrow(r, "ipow");
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace falt
