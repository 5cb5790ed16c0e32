#pragma once

// Stable Faltings height of X_n : y^2 = x(1 - x^n), n odd:
//   h = (n/8) sum_{p|n} c_p log p + (n/8) log n - (g/2) log pi + (g/(2n)) log 2 - S(n)
// with c_p = (p^{2e} - 1) / (p^{2e-1} (p^2 - 1)), e = ord_p(n), g = (n-1)/2.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "falt/exact.hpp"
#include "falt/real.hpp"

namespace falt {

/// Thrown when the two assemblies of the height disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct HeightBreakdown {
  std::int64_t n = 0;
  std::int64_t genus = 0;
  Real finite_sum;  // (n/8) sum_p c_p log p
  Real log_n_term;  // (n/8) log n
  Real pi_term;     // -(g/2) log pi
  Real two_term;    // (g/(2n)) log 2
  Real gamma_term;  // -S(n)
  Real total;
};

struct FiniteTerm {
  std::int64_t prime = 0;
  int exponent = 0;
  Rational coefficient;  // c_p
};

/// c_p for every prime p | n. Requires odd n >= 3.
std::vector<FiniteTerm> finite_place_terms(std::int64_t n);

/// sum_p c_p log p (no n/8 factor).
Real prime_sum(std::int64_t n, const PrecisionContext& ctx);

/// (n/8) sum_p c_p log p.
Real finite_place_sum(std::int64_t n, const PrecisionContext& ctx);

/// The five summands and their total. Also assembles
///   h = (1/(4n)) [sum_p ord_p(Lambda_n) log p - log ||Lambda_n||]
/// with the orders taken from the cluster pictures, and throws
/// ConsistencyError if the two disagree.
HeightBreakdown faltings_height(std::int64_t n, const PrecisionContext& ctx);

/// The second assembly on its own, with S(n) supplied.
Real height_from_lambda(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx);

struct DeligneCheck {
  Real formula_value;  // the height formula at n = 3
  Real deligne_value;  // -(1/2) log(Gamma(1/3)^3 / (sqrt 3 Gamma(2/3)^3)) - (1/2) log pi
};

DeligneCheck deligne_check(const PrecisionContext& ctx);

struct CmHeightBounds {
  Real remond_bound;      // h + ((n - 1 - phi(n))/2) log(pi sqrt 2)
  Real corollary_bound;   // (n/8) log n + (9/64) n log log n - 0.136 n
};

CmHeightBounds cm_height_bounds(std::int64_t n, const PrecisionContext& ctx);
CmHeightBounds cm_height_bounds(const HeightBreakdown& h, const PrecisionContext& ctx);

}  // namespace falt
