#include "falt/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "falt/bound_constants.hpp"
#include "falt/gamma.hpp"

namespace falt {

using namespace bound_constants;

namespace {

Real infinity(int sign, Precision bits) {
  Real x(bits);
  mpfr_set_inf(x.get(), sign);
  return x;
}

enum class ExactLow { kNone, kEqual, kAbove, kBelow };

BoundReport make_report(std::string name, std::int64_t n, Real quantity, Real lower, Real upper, bool lower_strict,
                        bool upper_strict) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.quantity = std::move(quantity);
  r.lower = std::move(lower);
  r.upper = std::move(upper);
  r.lower_strict = lower_strict;
  r.upper_strict = upper_strict;
  return r;
}

// A bound counts as cleared only with more than `guard` to spare, strict or
// not; an exact lower-bound verdict replaces the numeric one.
void decide(BoundReport& r, const Real& guard, ExactLow exact = ExactLow::kNone) {
  r.margin_low = r.quantity - r.lower;
  r.margin_high = r.upper - r.quantity;
  bool low_ok = r.margin_low > guard;
  if (exact != ExactLow::kNone) {
    r.lower_exact = true;
    if (exact == ExactLow::kEqual) r.margin_low = Real(r.quantity.precision());
    low_ok = exact == ExactLow::kAbove || (exact == ExactLow::kEqual && !r.lower_strict);
  }
  r.satisfied = low_ok && r.margin_high > guard;
}

Real rq(const Rational& q, Precision bits) { return Real(q, bits); }

std::vector<bool> odd_prime_sieve(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return composite;
}

}  // namespace

std::string format_bound_report(const BoundReport& r, int digits) {
  std::ostringstream os;
  os << r.name << " n=" << r.n << ' ' << (r.satisfied ? "ok" : "FAIL") << " quantity=" << r.quantity.to_string(digits)
     << " lower=" << r.lower.to_string(digits) << " upper=" << r.upper.to_string(digits)
     << " margin_low=" << r.margin_low.to_string(6) << " margin_high=" << r.margin_high.to_string(6);
  if (r.lower_exact) os << " (lower decided exactly)";
  return os.str();
}

BoundReport gamma_sum_bounds(std::int64_t n, const PrecisionContext& ctx) {
  return gamma_sum_bounds(n, gamma_ratio_sum(n, ctx), ctx);
}

BoundReport gamma_sum_bounds(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx) {
  const Real c_n = gamma_sum_slope(ctx) * n;
  BoundReport r = make_report("gamma_sum", n, gamma_sum, c_n - log_gamma_integral_head_bound(n, ctx) * n, c_n,
                              false, false);
  decide(r, ctx.inequality_guard());
  return r;
}

BoundReport prime_sum_bounds(std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real log_n = log_of(n, wp);
  BoundReport r = make_report("prime_sum", n, prime_sum(n, ctx), log_n / n,
                              rq(kPrimeSumLogLog, wp) * log(log_n) + rq(kPrimeSumConstant, wp), false, true);
  // For n = p^e both sides are rational multiples of log p: c_p log p vs (e/p^e) log p.
  const auto terms = finite_place_terms(n);
  ExactLow exact = ExactLow::kNone;
  if (terms.size() == 1) {
    const Rational rhs(terms[0].exponent, n);
    const auto cmp = terms[0].coefficient <=> rhs;
    exact = cmp == 0 ? ExactLow::kEqual : (cmp > 0 ? ExactLow::kAbove : ExactLow::kBelow);
  }
  decide(r, ctx.inequality_guard(), exact);
  return r;
}

std::vector<BoundReport> rosser_schoenfeld_checks(std::int64_t x_max, const PrecisionContext& ctx) {
  if (x_max < 3 || x_max > kSieveLimit) throw std::invalid_argument("rosser_schoenfeld_checks: x_max out of range");
  const Precision wp = ctx.working_bits();
  const Real guard = ctx.inequality_guard();
  const Real ratio = rq(kThetaRatio, wp);
  const auto composite = odd_prime_sieve(x_max);

  std::vector<BoundReport> out;
  Real theta(wp);
  Real weighted(wp);
  for (std::int64_t q = 2; q <= x_max; ++q) {
    if (composite[q]) continue;
    const Real log_q = log_of(q, wp);
    theta += log_q;
    weighted += log_q / q;
    if (q < 3) continue;
    BoundReport t = make_report(q < kThetaDirectLimit ? "theta_direct" : "theta", q, theta, ratio * q,
                                infinity(1, wp), false, false);
    decide(t, guard);
    out.push_back(std::move(t));
    BoundReport w = make_report("log_p_over_p", q, weighted, infinity(-1, wp), log_q, false, false);
    decide(w, guard);
    out.push_back(std::move(w));
  }
  return out;
}

BoundReport corollary_bounds_check(std::int64_t n, const PrecisionContext& ctx) {
  return corollary_bounds_check(faltings_height(n, ctx), ctx);
}

BoundReport corollary_bounds_check(const HeightBreakdown& h, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const std::int64_t n = h.n;
  const Real loglog = log(log_of(n, wp));
  BoundReport r = make_report("corollary", n, h.total - h.log_n_term, -rq(kHeightLowerSlope, wp) * n,
                              rq(kLogLogSlope, wp) * n * loglog - rq(kHeightUpperSlope, wp) * n, true, true);
  decide(r, ctx.inequality_guard());
  return r;
}

Real intermediate_upper_bound(std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real log_n = log_of(n, wp);
  return log_n * n / 8 + rq(kLogLogSlope, wp) * n * log(log_n) - rq(kIntermediateSlope, wp) * n + log_n / 2 +
         rq(kIntermediateConstant, wp);
}

BoundReport intermediate_bound_check(const HeightBreakdown& h, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  BoundReport r =
      make_report("intermediate", h.n, h.total, infinity(-1, wp), intermediate_upper_bound(h.n, ctx), true, true);
  decide(r, ctx.inequality_guard());
  return r;
}

BoundReport cm_bound_check(std::int64_t n, const PrecisionContext& ctx) {
  return cm_bound_check(faltings_height(n, ctx), ctx);
}

BoundReport cm_bound_check(const HeightBreakdown& h, const PrecisionContext& ctx) {
  CmHeightBounds b = cm_height_bounds(h, ctx);
  BoundReport r = make_report("cm", h.n, std::move(b.remond_bound), infinity(-1, ctx.working_bits()),
                              std::move(b.corollary_bound), true, true);
  decide(r, ctx.inequality_guard());
  return r;
}

std::vector<BoundReport> constant_chain_checks(const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real guard = ctx.inequality_guard();
  const auto& k = ctx.constants();
  const Real none_low = infinity(-1, wp);
  const Real none_high = infinity(1, wp);
  std::vector<BoundReport> out;
  auto add = [&](const char* name, Real quantity, const Real& lower, const Real& upper, bool strict) {
    BoundReport r = make_report(name, 0, std::move(quantity), lower, upper, strict, strict);
    decide(r, guard);
    out.push_back(std::move(r));
  };
  auto exact = [&](const char* name, const Rational& lhs, const Rational& rhs) {
    // lhs <= rhs, decided on rationals.
    BoundReport r = make_report(name, 0, rq(lhs, wp), none_low, rq(rhs, wp), false, false);
    r.margin_low = none_high;
    r.margin_high = rq(rhs - lhs, wp);
    r.satisfied = lhs <= rhs;
    out.push_back(std::move(r));
  };

  const Real log3 = log_of(3, wp);
  const Real log_pi_sqrt2 = k.log_pi + k.log_2 / 2;
  // 3 - log 2 - 36 zeta'(-1) + 3 log pi
  const Real big = gamma_sum_slope(ctx) * 12 + k.log_pi * 3;

  add("lower_slope", big / 12, none_low, rq(kHeightLowerSlope, wp), true);
  add("log_2n_ratio", log_of(6, wp) / log3, none_low, rq(kLogTwoNRatio, wp), false);
  add("omega_tail", log(rq(kLogTwoNRatio / kThetaRatio, wp)) - k.log_2 / 2, none_low, rq(kOmegaTail, wp), true);
  exact("prime_sum_constant", kPrimeSumLogLog * kOmegaTail, kPrimeSumConstant);
  exact("prime_sum_over_8", kPrimeSumConstant / Rational(8), kSlopeCorrection / Rational(12));
  add("intermediate_slope", (big - rq(kSlopeCorrection, wp)) / 12, rq(kIntermediateSlope, wp), none_high,
      true);
  add("intermediate_constant", k.log_pi / 4 + k.log_2 * 3 / 4 + rq(Rational(1, 2), wp), none_low,
      rq(kIntermediateConstant, wp), true);
  add("log_n_over_n", log3 / 3, none_low, rq(kLogOverN, wp), false);
  exact("upper_slope", kHeightUpperSlope,
        kIntermediateSlope - kLogOverN / Rational(2) - kIntermediateConstant / Rational(3));
  const Real phi_factor = exp(Real(1, wp)) * k.log_2 / log3;
  add("phi_log_factor", phi_factor, rq(kPhiLogFactor, wp), none_high, false);

  // ((n-1)/2) L - (1.715 L / 2) log n <= 0.7457 n - 1.2788 log n - 0.7456
  // is linear in n and log n; it holds for all n >= 3 when it holds at 3 and
  // the difference is increasing there.
  const Real half_l = log_pi_sqrt2 / 2;
  const Real a = rq(kRemondSlope, wp) - half_l;
  const Real b = rq(kRemondLog, wp) - rq(kPhiLogFactor, wp) * half_l;
  const Real c = half_l - rq(kRemondConstant, wp);
  add("remond_line_at_3", a * 3 - b * log3 + c, Real(wp), none_high, false);
  add("remond_line_slope", a - max(b, Real(wp)) / 3, Real(wp), none_high, false);

  exact("cm_slope", kIntermediateSlope - kRemondSlope, kCmSlope);
  exact("cm_slope_reverse", kCmSlope, kIntermediateSlope - kRemondSlope);
  exact("cm_constant", kIntermediateConstant - kRemondConstant, kCmConstant);
  exact("cm_constant_reverse", kCmConstant, kIntermediateConstant - kRemondConstant);
  // -0.1364 n - 0.7788 log n + 0.5605 < -0.136 n at n = 3, decreasing after.
  const Real cm_log = rq(kRemondLog - Rational(1, 2), wp);
  add("cm_final_at_3", -rq(kCmSlope, wp) * 3 - cm_log * log3 + rq(kCmConstant, wp), none_low,
      -rq(kCmFinalSlope, wp) * 3, true);
  exact("cm_final_slope", kCmFinalSlope, kCmSlope);
  return out;
}

}  // namespace falt
