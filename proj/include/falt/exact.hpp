#pragma once

// Exact integer and rational arithmetic for the finite-place computations.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace falt {

/// Thrown when a checked integer operation would leave the int64 range.
class OverflowError : public std::exception {
 public:
  explicit OverflowError(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every operation reduces eagerly. Intermediates are formed in 128 bits and
/// the reduced result must fit in int64, otherwise OverflowError is thrown.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", or "num" when den == 1.
  std::string to_string() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;
  explicit PrimeFactorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  /// Product of p^e over all entries (checked).
  std::int64_t value() const;

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// Trial division up to sqrt(n). Throws std::invalid_argument for n < 2.
PrimeFactorization factorize(std::int64_t n);

/// Exponent of p in n. Throws std::invalid_argument for n < 1 or composite p.
int ord_p(std::int64_t n, std::int64_t p);

/// Euler's totient, from the factorization. phi(1) = 1.
std::int64_t euler_phi(std::int64_t n);

/// Checked integer power.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace falt
