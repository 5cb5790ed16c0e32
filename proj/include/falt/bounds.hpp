#pragma once

// Explicit inequalities around the height: the gamma-sum bounds, the prime
// sum bounds and their prime-number ingredients, and the two corollary
// envelopes. Every check returns a BoundReport; none of them throws on a
// violated inequality.

#include <cstdint>
#include <string>
#include <vector>

#include "falt/height.hpp"
#include "falt/real.hpp"

namespace falt {

struct BoundReport {
  std::string name;
  std::int64_t n = 0;
  Real quantity;
  Real lower;  // -inf when there is no lower bound
  Real upper;  // +inf when there is no upper bound
  bool lower_strict = true;
  bool upper_strict = true;
  bool satisfied = false;
  Real margin_low;   // quantity - lower
  Real margin_high;  // upper - quantity
  /// Set when the lower bound was decided by an exact rational comparison.
  bool lower_exact = false;
};

/// One line: name, n, verdict, quantity and margins.
std::string format_bound_report(const BoundReport& r, int digits = 12);

/// C n - (1 + log 2n)/2 <= S(n) <= C n, C = (3 - log 2 - 36 zeta'(-1))/12.
BoundReport gamma_sum_bounds(std::int64_t n, const PrecisionContext& ctx);
BoundReport gamma_sum_bounds(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx);

/// (log n)/n <= sum_p c_p log p < (9/8) log log n + 0.7405. For prime powers
/// the lower bound is decided exactly (equality holds for primes).
BoundReport prime_sum_bounds(std::int64_t n, const PrecisionContext& ctx);

inline constexpr std::int64_t kSieveLimit = 1'000'000;

/// For each prime 3 <= q <= x_max:
///   "theta":      theta(q) >= 0.5972 q
///   "log_p_over_p": sum_{p <= q} log p / p <= log q
/// Throws std::invalid_argument for x_max outside [3, kSieveLimit].
std::vector<BoundReport> rosser_schoenfeld_checks(std::int64_t x_max, const PrecisionContext& ctx);

/// -0.975 n < h - (n/8) log n < (9/64) n log log n - 0.263 n.
BoundReport corollary_bounds_check(std::int64_t n, const PrecisionContext& ctx);
BoundReport corollary_bounds_check(const HeightBreakdown& h, const PrecisionContext& ctx);

/// n/8 log n + 9/64 n log log n - 0.8821 n + 1/2 log n + 1.3061.
Real intermediate_upper_bound(std::int64_t n, const PrecisionContext& ctx);
/// h < intermediate bound.
BoundReport intermediate_bound_check(const HeightBreakdown& h, const PrecisionContext& ctx);

/// h + ((n - 1 - phi(n))/2) log(pi sqrt 2) < (n/8) log n + (9/64) n log log n - 0.136 n.
BoundReport cm_bound_check(std::int64_t n, const PrecisionContext& ctx);
BoundReport cm_bound_check(const HeightBreakdown& h, const PrecisionContext& ctx);

/// Each decimal constant against the exact quantity it stands for.
std::vector<BoundReport> constant_chain_checks(const PrecisionContext& ctx);

}  // namespace falt
