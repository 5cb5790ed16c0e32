#include "falt/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace falt {

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, corrected on output.
class BernoulliTable {
 public:
  mpq_class get(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard lock(mu_);
    while (static_cast<int>(values_.size()) <= k) extend(2 * static_cast<int>(values_.size()) + 8);
    mpq_class b = values_[static_cast<std::size_t>(k)];
    if (k == 1) b = -b;
    return b;
  }

 private:
  void extend(int count) {
    values_.clear();
    std::vector<mpq_class> row(static_cast<std::size_t>(count) + 1);
    for (int m = 0; m <= count; ++m) {
      row[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
      for (int j = m; j >= 1; --j) {
        auto& a = row[static_cast<std::size_t>(j) - 1];
        a = j * (a - row[static_cast<std::size_t>(j)]);
        a.canonicalize();
      }
      values_.push_back(row[0]);
    }
  }

  std::mutex mu_;
  std::vector<mpq_class> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

void set_q(mpfr_ptr out, const mpq_class& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

// Stirling coefficients c_m = B_2m / (2m (2m-1)) and the shift threshold for
// one working precision.
struct StirlingTable {
  Precision bits = 0;
  long z0 = 0;
  std::vector<Real> coeff;  // c_1 .. c_M
  Real half_log_2pi{64};
};

std::shared_ptr<const StirlingTable> build_stirling(Precision bits) {
  auto t = std::make_shared<StirlingTable>();
  t->bits = bits;
  // Smallest Stirling term is about exp(-2 pi z); require it below 2^-bits.
  t->z0 = static_cast<long>(std::ceil(static_cast<double>(bits) * std::log(2.0) / (2.0 * M_PI))) + 2;
  const Real eps = ldexp_one(-bits, bits);
  const Real z0(t->z0, bits);
  const Real inv_z0_sq = 1 / (z0 * z0);
  Real zpow = 1 / z0;  // z0^{-(2m-1)}
  for (int m = 1;; ++m) {
    Real c(bits);
    set_q(c.get(), bernoulli(2 * m) / mpq_class((2 * m) * (2 * m - 1)));
    if (abs(c) * zpow < eps) break;  // c_m is the first omitted term
    t->coeff.push_back(std::move(c));
    zpow *= inv_z0_sq;
    if (m > 4 * t->z0 + 64) throw std::logic_error("Stirling table failed to converge");
  }
  Real two_pi = const_pi(bits) * 2;
  t->half_log_2pi = log(two_pi) / 2;
  return t;
}

std::shared_ptr<const StirlingTable> stirling_table(Precision bits) {
  static std::mutex mu;
  static std::map<Precision, std::shared_ptr<const StirlingTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[bits];
  if (!slot) slot = build_stirling(bits);
  return slot;
}

// Scratch registers for the log-gamma hot path; avoids reallocating MPFR
// limbs for each of the ~n evaluations inside a gamma-ratio sum.
class LogGammaKernel {
 public:
  explicit LogGammaKernel(Precision bits) : table_(stirling_table(bits)) {
    for (auto* r : {z_, prod_, w_, acc_, t_}) mpfr_init2(r, bits);
  }
  ~LogGammaKernel() {
    for (auto* r : {z_, prod_, w_, acc_, t_}) mpfr_clear(r);
  }
  LogGammaKernel(const LogGammaKernel&) = delete;
  LogGammaKernel& operator=(const LogGammaKernel&) = delete;

  // out <- log Gamma(x), x > 0, at the kernel precision.
  void eval(mpfr_ptr out, mpfr_srcptr x) {
    if (mpfr_cmp_ui(x, 1) == 0 || mpfr_cmp_ui(x, 2) == 0) {
      mpfr_set_zero(out, 1);
      return;
    }
    const auto& coeff = table_->coeff;
    mpfr_set(z_, x, MPFR_RNDN);
    mpfr_set_ui(prod_, 1, MPFR_RNDN);
    bool shifted = false;
    while (mpfr_cmp_si(z_, table_->z0) < 0) {
      mpfr_mul(prod_, prod_, z_, MPFR_RNDN);
      mpfr_add_ui(z_, z_, 1, MPFR_RNDN);
      shifted = true;
    }
    // Horner in w = 1/z^2 for sum_m c_m z^{1-2m}.
    mpfr_sqr(w_, z_, MPFR_RNDN);
    mpfr_ui_div(w_, 1, w_, MPFR_RNDN);
    mpfr_set_zero(acc_, 1);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
      mpfr_mul(acc_, acc_, w_, MPFR_RNDN);
      mpfr_add(acc_, acc_, it->get(), MPFR_RNDN);
    }
    mpfr_div(acc_, acc_, z_, MPFR_RNDN);
    // (z - 1/2) log z - z + log(2 pi)/2 + series
    mpfr_log(t_, z_, MPFR_RNDN);
    mpfr_sub_d(out, z_, 0.5, MPFR_RNDN);
    mpfr_mul(out, out, t_, MPFR_RNDN);
    mpfr_sub(out, out, z_, MPFR_RNDN);
    mpfr_add(out, out, table_->half_log_2pi.get(), MPFR_RNDN);
    mpfr_add(out, out, acc_, MPFR_RNDN);
    if (shifted) {
      mpfr_log(t_, prod_, MPFR_RNDN);
      mpfr_sub(out, out, t_, MPFR_RNDN);
    }
  }

 private:
  std::shared_ptr<const StirlingTable> table_;
  mpfr_t z_, prod_, w_, acc_, t_;
};

Real log_gamma_at(const Real& x, Precision bits) {
  if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");
  LogGammaKernel kernel(bits);
  Real xw = x.rounded(std::max(bits, x.precision()));
  Real out(bits);
  kernel.eval(out.get(), xw.get());
  return out;
}

// Sum of log Gamma((2j-1)/(2n)) - log Gamma(1/2 + (2j-1)/(2n)), j = 1..g.
Real gamma_sum_at(std::int64_t n, std::int64_t g, Precision bits) {
  LogGammaKernel kernel(bits);
  Real sum(bits);
  Real arg(bits);
  Real term(bits);
  for (std::int64_t j = 1; j <= g; ++j) {
    // Arguments formed exactly, converted once.
    mpfr_set_si(arg.get(), 2 * j - 1, MPFR_RNDN);
    mpfr_div_si(arg.get(), arg.get(), 2 * n, MPFR_RNDN);
    kernel.eval(term.get(), arg.get());
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_set_si(arg.get(), n + 2 * j - 1, MPFR_RNDN);
    mpfr_div_si(arg.get(), arg.get(), 2 * n, MPFR_RNDN);
    kernel.eval(term.get(), arg.get());
    mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return sum;
}

// zeta'(2) = -sum_{k>=1} log k / k^2. Direct sum below N, Euler-Maclaurin tail:
//   sum_{k>=N} f(k) = (log N + 1)/N + log N/(2 N^2)
//                   + sum_m B_2m N^{-2m-1} (log N + 1 - H_2m)
Real zeta_prime_two_at(Precision bits) {
  const long big_n = std::max<long>(16, static_cast<long>(0.12 * static_cast<double>(bits)) + 8);
  Real sum(bits);
  for (long k = 2; k < big_n; ++k) {
    Real kk(k, bits);
    sum += log(kk) / (kk * kk);
  }
  const Real nr(big_n, bits);
  const Real log_n = log(nr);
  Real tail = (log_n + 1) / nr + log_n / (2 * nr * nr);
  const Real eps = ldexp_one(-bits - 8, bits);
  Real harmonic(1, bits);  // H_{2m}, advanced two steps per m
  Real npow = 1 / nr;      // N^{-2m-1}
  const Real inv_n_sq = 1 / (nr * nr);
  Real prev_mag(bits);
  for (int m = 1;; ++m) {
    harmonic += Real(Rational(1, 2 * m), bits);
    if (m > 1) harmonic += Real(Rational(1, 2 * m - 1), bits);
    npow *= inv_n_sq;
    Real b(bits);
    set_q(b.get(), bernoulli(2 * m));
    Real term = b * npow * (log_n + 1 - harmonic);
    Real mag = abs(term);
    tail += term;
    if (mag < eps * abs(tail)) break;
    if (m > 3 && mag > prev_mag) throw std::logic_error("zeta'(2): Euler-Maclaurin diverged");
    prev_mag = mag;
  }
  return -(sum + tail);
}

Real ctx_const(const Real& v, const PrecisionContext& ctx) { return v.rounded(ctx.bits()); }

}  // namespace

mpq_class bernoulli(int k) { return bernoulli_table().get(k); }

void ConstantCache::ensure(const PrecisionContext& ctx) {
  std::call_once(once, [&] {
    const Precision wp = ctx.working_bits();
    pi = const_pi(wp);
    log_pi = log(pi);
    log_2 = const_log2(wp);
    log_2pi = log_2 + log_pi;
    euler_gamma = const_euler(wp);
    zeta_prime_two = zeta_prime_two_at(wp);
    log_glaisher = (euler_gamma + log_2pi) / 12 - zeta_prime_two / (2 * pi * pi);
    zeta_prime_minus_one = Real(Rational(1, 12), wp) - log_glaisher;
  });
}

Real log_gamma(const Real& x, const PrecisionContext& ctx) {
  return log_gamma_at(x, ctx.working_bits()).rounded(ctx.bits());
}

Real log_gamma(const Rational& x, const PrecisionContext& ctx) {
  if (x <= Rational(0)) throw std::domain_error("log_gamma: argument must be positive");
  return log_gamma(Real(x, ctx.working_bits()), ctx);
}

Real log_beta(const Real& a, const Real& b, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  Real aw = a.rounded(std::max(wp, a.precision()));
  Real bw = b.rounded(std::max(wp, b.precision()));
  Real r = log_gamma_at(aw, wp) + log_gamma_at(bw, wp) - log_gamma_at(aw + bw, wp);
  return r.rounded(ctx.bits());
}

Real log_beta(const Rational& a, const Rational& b, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  if (a <= Rational(0) || b <= Rational(0)) throw std::domain_error("log_beta: arguments must be positive");
  Real r = log_gamma_at(Real(a, wp), wp) + log_gamma_at(Real(b, wp), wp) - log_gamma_at(Real(a + b, wp), wp);
  return r.rounded(ctx.bits());
}

Real zeta_prime_two(const PrecisionContext& ctx) { return ctx_const(ctx.constants().zeta_prime_two, ctx); }

Real log_glaisher(const PrecisionContext& ctx) { return ctx_const(ctx.constants().log_glaisher, ctx); }

Real zeta_prime_minus_one(const PrecisionContext& ctx) {
  return ctx_const(ctx.constants().zeta_prime_minus_one, ctx);
}

Real log_barnes_g_half(const PrecisionContext& ctx) {
  const auto& c = ctx.constants();
  Real r = c.log_2 / 24 + c.zeta_prime_minus_one * 3 / 2 - c.log_pi / 4;
  return r.rounded(ctx.bits());
}

Real log_gamma_integral(const Rational& z, const PrecisionContext& ctx) {
  const auto& c = ctx.constants();
  const Precision wp = ctx.working_bits();
  if (z == Rational(1)) return (c.log_2pi / 2).rounded(ctx.bits());
  if (z == Rational(1, 2)) {
    Real log_g_half = c.log_2 / 24 + c.zeta_prime_minus_one * 3 / 2 - c.log_pi / 4;
    Real r = Real(Rational(1, 8), wp) + c.log_2 / 4 - log_g_half;
    return r.rounded(ctx.bits());
  }
  throw std::domain_error("log_gamma_integral: only z = 1/2 and z = 1 are supported, got " +
                          z.to_string());
}

Real log_gamma_integral_head_bound(std::int64_t n, const PrecisionContext& ctx) {
  if (n < 1) throw std::domain_error("log_gamma_integral_head_bound: n must be >= 1");
  const Precision wp = ctx.working_bits();
  Real r = (1 + log_of(2 * n, wp)) / (2 * n);
  return r.rounded(ctx.bits());
}

Real gamma_sum_slope(const PrecisionContext& ctx) {
  const auto& c = ctx.constants();
  Real r = (3 - c.log_2 - c.zeta_prime_minus_one * 36) / 12;
  return r.rounded(ctx.bits());
}

Real gamma_ratio_sum(std::int64_t n, const PrecisionContext& ctx) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("gamma_ratio_sum: n must be odd and >= 3");
  return gamma_sum_at(n, (n - 1) / 2, ctx.working_bits()).rounded(ctx.bits());
}

Real period_gamma_sum(std::int64_t n, const PrecisionContext& ctx) {
  if (n < 2) throw std::domain_error("period_gamma_sum: n must be >= 2");
  return gamma_sum_at(n, n / 2, ctx.working_bits()).rounded(ctx.bits());
}

}  // namespace falt
