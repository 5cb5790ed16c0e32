#include "falt/quadrature.hpp"

#include <utility>

namespace falt {

namespace {

// Adds the contributions of nodes u = (odd multiple of) h (or all multiples
// when `all` is set) for u >= 0 and their mirrors, walking outwards until the
// weighted integrand is negligible against the running sum.
Real sweep_level(const UnitIntegrand& f, const Real& h, bool all, const Real& eps, Precision bits) {
  const Real half_pi = const_pi(bits) / 2;
  Real sum(bits);
  int quiet = 0;
  for (long k = all ? 0 : 1;; k += all ? 1 : 2) {
    const Real u = h * k;
    const Real s = half_pi * sinh(u);
    // a = e^{-2s}; t = 1/(1+a) near 1, c = a/(1+a) = 1 - t near 0.
    const Real a = exp(-2 * s);
    const Real log1p_a = log1p(a);
    const Real t = 1 / (1 + a);
    const Real c = a / (1 + a);
    const Real log_t = -log1p_a;
    const Real log_c = -2 * s - log1p_a;
    const Real weight = 2 * half_pi * cosh(u) * t * c;

    Real contrib = weight * f(UnitNode{t, c, log_t, log_c});
    if (k != 0) contrib += weight * f(UnitNode{c, t, log_c, log_t});
    const bool tiny = abs(contrib) <= eps * abs(sum);
    sum += contrib;
    // Two consecutive negligible nodes end the walk (integrands here are
    // monotone near the endpoints).
    quiet = tiny ? quiet + 1 : 0;
    if (quiet >= 2 || weight.is_zero()) break;
    if (k > (1L << 22)) throw QuadratureError("tanh-sinh: node walk did not terminate");
  }
  return sum;
}

}  // namespace

QuadratureResult tanh_sinh_unit(const UnitIntegrand& f, const Real& relative_target, Precision bits,
                                int max_level) {
  const Real eps = ldexp_one(-bits - 4, bits);
  Real h(1, bits);
  Real raw = sweep_level(f, h, true, eps, bits);  // sum over all multiples of h
  Real prev = raw * h;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    raw += sweep_level(f, h, false, eps, bits);
    Real cur = raw * h;
    Real err = abs(cur - prev);
    if (level >= 3 && err <= relative_target * abs(cur)) return {std::move(cur), std::move(err), level};
    prev = std::move(cur);
  }
  throw QuadratureError("tanh-sinh: no convergence after " + std::to_string(max_level) + " levels");
}

}  // namespace falt
