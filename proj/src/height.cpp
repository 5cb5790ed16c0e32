#include "falt/height.hpp"

#include <string>

#include "falt/archimedean.hpp"
#include "falt/bound_constants.hpp"
#include "falt/cluster.hpp"
#include "falt/gamma.hpp"

namespace falt {

namespace {

void require_odd(std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("height: n must be odd and >= 3");
}

HeightBreakdown assemble(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const auto& k = ctx.constants();
  HeightBreakdown h;
  h.n = n;
  h.genus = (n - 1) / 2;
  h.finite_sum = finite_place_sum(n, ctx);
  h.log_n_term = log_of(n, wp) * n / 8;
  h.pi_term = -(k.log_pi * h.genus) / 2;
  h.two_term = k.log_2 * Real(Rational(h.genus, 2 * n), wp);
  h.gamma_term = -gamma_sum;
  h.total = h.finite_sum + h.log_n_term + h.pi_term + h.two_term + h.gamma_term;
  return h;
}

}  // namespace

std::vector<FiniteTerm> finite_place_terms(std::int64_t n) {
  require_odd(n);
  std::vector<FiniteTerm> out;
  for (const auto& pp : factorize(n)) out.push_back({pp.prime, pp.exponent, finite_coefficient(n, pp.prime)});
  return out;
}

Real prime_sum(std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  Real sum(wp);
  for (const auto& t : finite_place_terms(n)) sum += Real(t.coefficient, wp) * log_of(t.prime, wp);
  return sum;
}

Real finite_place_sum(std::int64_t n, const PrecisionContext& ctx) { return prime_sum(n, ctx) * n / 8; }

Real height_from_lambda(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx) {
  require_odd(n);
  const Precision wp = ctx.working_bits();
  Real orders(wp);
  for (const auto& pp : factorize(n)) {
    orders += Real(kunzweiler_order(cluster_picture(n, pp.prime)), wp) * log_of(pp.prime, wp);
  }
  return (orders - log_lambda_norm(n, gamma_sum, ctx)) / (4 * n);
}

HeightBreakdown faltings_height(std::int64_t n, const PrecisionContext& ctx) {
  require_odd(n);
  const Real s = gamma_ratio_sum(n, ctx);
  HeightBreakdown h = assemble(n, s, ctx);

  const Real other = height_from_lambda(n, s, ctx);
  Real scale = max(Real(1, ctx.working_bits()), abs(h.finite_sum));
  for (const Real* part : {&h.log_n_term, &h.pi_term, &h.two_term, &h.gamma_term}) scale = max(scale, abs(*part));
  if (abs(h.total - other) > ldexp_one(16 - ctx.bits(), ctx.working_bits()) * scale) {
    throw ConsistencyError("faltings_height: assemblies disagree at n = " + std::to_string(n) + ": " +
                           h.total.to_string(25) + " vs " + other.to_string(25));
  }
  return h;
}

DeligneCheck deligne_check(const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real lg13 = log_gamma(Rational(1, 3), ctx);
  const Real lg23 = log_gamma(Rational(2, 3), ctx);
  const Real h_prime = -(lg13 * 3 - log_of(3, wp) / 2 - lg23 * 3) / 2;
  return {faltings_height(3, ctx).total, h_prime - ctx.constants().log_pi / 2};
}

CmHeightBounds cm_height_bounds(std::int64_t n, const PrecisionContext& ctx) {
  return cm_height_bounds(faltings_height(n, ctx), ctx);
}

CmHeightBounds cm_height_bounds(const HeightBreakdown& h, const PrecisionContext& ctx) {
  using namespace bound_constants;
  const std::int64_t n = h.n;
  const Precision wp = ctx.working_bits();
  const auto& k = ctx.constants();
  const Real log_pi_sqrt2 = k.log_pi + k.log_2 / 2;
  const Real log_n = log_of(n, wp);
  CmHeightBounds b;
  b.remond_bound = h.total + log_pi_sqrt2 * Real(Rational(n - 1 - euler_phi(n), 2), wp);
  b.corollary_bound =
      log_n * n / 8 + Real(kLogLogSlope, wp) * n * log(log_n) - Real(kCmFinalSlope, wp) * n;
  return b;
}

}  // namespace falt
