#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "falt/bounds.hpp"
#include "falt/gamma.hpp"

using namespace falt;

TEST_CASE("bounds hold at sample n") {
  const PrecisionContext ctx(128);
  for (std::int64_t n : {3, 5, 9, 15, 27, 225, 6001}) {
    CAPTURE(n);
    const HeightBreakdown h = faltings_height(n, ctx);
    for (const BoundReport& r :
         {corollary_bounds_check(h, ctx), gamma_sum_bounds(n, ctx), prime_sum_bounds(n, ctx),
          intermediate_bound_check(h, ctx), cm_bound_check(h, ctx)}) {
      INFO(format_bound_report(r));
      CHECK(r.satisfied);
    }
    CHECK(intermediate_upper_bound(n, ctx) - h.log_n_term < corollary_bounds_check(h, ctx).upper);
  }
}

TEST_CASE("prime sum lower bound is an equality at primes") {
  const PrecisionContext ctx(128);
  for (std::int64_t p : {3, 5, 7, 11, 6007}) {
    const BoundReport r = prime_sum_bounds(p, ctx);
    CHECK(r.lower_exact);
    CHECK(r.satisfied);
    CHECK(r.margin_low.is_zero());
    CHECK(format_bound_report(r).find("(lower decided exactly)") != std::string::npos);
  }
  // Prime powers: c_p > e/p^e, still decided exactly.
  for (std::int64_t q : {9, 25, 27, 243}) {
    const BoundReport r = prime_sum_bounds(q, ctx);
    CHECK(r.lower_exact);
    CHECK(r.satisfied);
    CHECK(r.margin_low > 0);
  }
  CHECK_FALSE(prime_sum_bounds(15, ctx).lower_exact);
}

TEST_CASE("gamma sum window has width (1 + log 2n)/2") {
  const PrecisionContext ctx(128);
  for (std::int64_t n : {3, 101, 6001}) {
    const BoundReport r = gamma_sum_bounds(n, ctx);
    const Real width = (1 + log_of(2 * n, 160)) / 2;
    CHECK(abs(r.margin_low + r.margin_high - width) < ctx.function_tolerance() * n);
    CHECK(r.margin_high > 0);
    CHECK(r.margin_high < width);
  }
}

TEST_CASE("a violated inequality is reported, not thrown") {
  const PrecisionContext ctx(128);
  const Real fake = gamma_sum_slope(ctx) * 9 + 1;
  const BoundReport r = gamma_sum_bounds(9, fake, ctx);
  CHECK_FALSE(r.satisfied);
  CHECK(r.margin_high < 0);
  CHECK(format_bound_report(r).find(" FAIL ") != std::string::npos);
  // Within the guard counts as a failure even for a non-strict bound.
  const BoundReport edge = gamma_sum_bounds(9, gamma_sum_slope(ctx) * 9, ctx);
  CHECK_FALSE(edge.satisfied);
}

TEST_CASE("prime-counting inputs") {
  const PrecisionContext ctx(128);
  const auto reports = rosser_schoenfeld_checks(20000, ctx);
  CHECK(std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.satisfied; }));
  const auto at = [&](const char* name, std::int64_t q) {
    return *std::find_if(reports.begin(), reports.end(),
                         [&](const BoundReport& r) { return r.name == name && r.n == q; });
  };
  CHECK(abs(at("theta", 101).quantity - Real::from_string("88.34351091590518", 64)) < Real::from_string("1e-12", 64));
  CHECK(at("theta_direct", 97).n == 97);
  CHECK(abs(at("log_p_over_p", 3).quantity - (log_of(2, 64) / 2 + log_of(3, 64) / 3)) < Real::from_string("1e-15", 64));
  // 2 composite-free entries per odd prime up to 20000 (2261 odd primes)
  CHECK(reports.size() == 2 * 2261);
  CHECK_THROWS_AS(rosser_schoenfeld_checks(2, ctx), std::invalid_argument);
  CHECK_THROWS_AS(rosser_schoenfeld_checks(kSieveLimit + 1, ctx), std::invalid_argument);
}

TEST_CASE("decimal constants") {
  for (Precision bits : {64, 128, 256}) {
    const auto chain = constant_chain_checks(PrecisionContext(bits));
    CHECK(chain.size() >= 18);
    for (const BoundReport& r : chain) {
      INFO(format_bound_report(r));
      CHECK(r.satisfied);
    }
  }
}

TEST_CASE("small range") {
  const PrecisionContext ctx(96);
  for (std::int64_t n = 3; n <= 401; n += 2) {
    CAPTURE(n);
    const HeightBreakdown h = faltings_height(n, ctx);
    CHECK(corollary_bounds_check(h, ctx).satisfied);
    CHECK(prime_sum_bounds(n, ctx).satisfied);
    CHECK(gamma_sum_bounds(n, -h.gamma_term, ctx).satisfied);
    CHECK(cm_bound_check(h, ctx).satisfied);
  }
}
