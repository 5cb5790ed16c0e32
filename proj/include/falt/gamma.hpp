#pragma once

// Configurable-precision special functions: log-gamma, log-beta, the
// Glaisher/zeta'(-1) family of constants, and the gamma-ratio sums that make
// up the archimedean part of the height.

#include <gmpxx.h>

#include <mutex>

#include "falt/exact.hpp"
#include "falt/real.hpp"

namespace falt {

/// Bernoulli number B_k (B_1 = -1/2), exact. Cached, thread-safe.
mpq_class bernoulli(int k);

/// log Gamma(x) for x > 0.
///
/// Shifts x up to z >= z0(precision) with
///   log Gamma(x) = log Gamma(x + K) - log prod_{i<K} (x + i)
/// and evaluates the Stirling series there. The number of Stirling terms is
/// fixed per precision so that the first omitted term (which bounds the
/// remainder for real z > 0) is below 2^-working_bits. The result carries an
/// absolute error below 2^{-(bits-8)} * max(1, |log Gamma(x)|).
/// Throws std::domain_error for x <= 0.
Real log_gamma(const Real& x, const PrecisionContext& ctx);
Real log_gamma(const Rational& x, const PrecisionContext& ctx);

/// log B(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a + b).
Real log_beta(const Real& a, const Real& b, const PrecisionContext& ctx);
Real log_beta(const Rational& a, const Rational& b, const PrecisionContext& ctx);

/// zeta'(2) = -sum log k / k^2, by Euler-Maclaurin summation.
Real zeta_prime_two(const PrecisionContext& ctx);

/// log of the Glaisher-Kinkelin constant,
///   log A = (gamma + log 2 pi) / 12 - zeta'(2) / (2 pi^2).
Real log_glaisher(const PrecisionContext& ctx);

/// zeta'(-1) = 1/12 - log A. Memoized per context.
Real zeta_prime_minus_one(const PrecisionContext& ctx);

/// log G(1/2) = log(2)/24 + (3/2) zeta'(-1) - log(pi)/4.
Real log_barnes_g_half(const PrecisionContext& ctx);

/// Integral of log Gamma over [0, z] for z in {1/2, 1}:
///   z = 1   -> log(2 pi) / 2
///   z = 1/2 -> 1/8 + log(2)/4 - log G(1/2)
/// Other z throw std::domain_error.
Real log_gamma_integral(const Rational& z, const PrecisionContext& ctx);

/// Upper bound (1 + log 2n) / (2n) for the integral of log Gamma over
/// [0, 1/(2n)], from log Gamma(x) <= -log x on (0, 1].
Real log_gamma_integral_head_bound(std::int64_t n, const PrecisionContext& ctx);

/// (3 - log 2 - 36 zeta'(-1)) / 12, the slope of both gamma-sum bounds.
Real gamma_sum_slope(const PrecisionContext& ctx);

/// S(n) = sum_{j=1}^{g} [log Gamma((2j-1)/(2n)) - log Gamma(1/2 + (2j-1)/(2n))]
/// with g = (n-1)/2. Requires odd n >= 3.
Real gamma_ratio_sum(std::int64_t n, const PrecisionContext& ctx);

/// Same sum with g = floor(n/2), for any n >= 2 (the period-matrix side
/// allows even n).
Real period_gamma_sum(std::int64_t n, const PrecisionContext& ctx);

/// Per-context memo of constants, all at the context's working precision.
struct ConstantCache {
  std::once_flag once;
  Real pi{64};
  Real log_pi{64};
  Real log_2{64};
  Real log_2pi{64};
  Real euler_gamma{64};
  Real zeta_prime_two{64};
  Real log_glaisher{64};
  Real zeta_prime_minus_one{64};

  void ensure(const PrecisionContext& ctx);
};

}  // namespace falt
