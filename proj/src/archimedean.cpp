#include "falt/archimedean.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "falt/gamma.hpp"
#include "falt/quadrature.hpp"

namespace falt {

namespace {

std::int64_t genus_of(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("archimedean: n must be >= 2");
  return n / 2;
}

void check_indices(int j, int k, std::int64_t g) {
  if (j < 1 || j > g || k < 1 || k > 2 * g) throw std::out_of_range("archimedean: entry index out of range");
}

// (1/n) * integral_0^1 t^{alpha-1} (1-t)^{-1/2} dt, alpha = (2j-1)/(2n).
Real quadrature_modulus(int j, std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real alpha_m1 = Real(Rational(2 * j - 1, 2 * n), wp) - 1;
  const Real minus_half = Real(Rational(-1, 2), wp);
  auto f = [&](const UnitNode& x) { return exp(alpha_m1 * x.log_t + minus_half * x.log_one_minus_t); };
  QuadratureResult r = tanh_sinh_unit(f, ctx.quadrature_target(), wp);
  return r.value / n;
}

// a_k^{j - 1/2} as (e^{i pi k / n})^{2j-1}, by repeated multiplication.
Complex root_phase(int j, int k, std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Complex step = Complex::polar(Real(1, wp), ctx.constants().pi * k / n);
  Complex phase(Real(1, wp), Real(wp));
  for (int i = 0; i < 2 * j - 1; ++i) phase *= step;
  return phase;
}

ComplexMatrix stacked(const ComplexMatrix& a) {
  const std::size_t g = a.rows();
  ComplexMatrix m(2 * g, a.cols(), a(0, 0).re.precision());
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = a(r, c);
      m(r + g, c) = a(r, c).conj();
    }
  }
  return m;
}

}  // namespace

Real log_lambda_norm(std::int64_t n, const PrecisionContext& ctx) {
  genus_of(n);
  return log_lambda_norm(n, period_gamma_sum(n, ctx), ctx);
}

Real log_lambda_norm(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx) {
  const std::int64_t g = genus_of(n);
  const auto& k = ctx.constants();
  const Precision wp = ctx.working_bits();
  return k.log_pi * (g * (4 * g + 2)) - k.log_2 * (2 * g) - log_of(n, wp) * (n * (g + 1)) + gamma_sum * (8 * g + 4);
}

Complex beta_entry(int j, int k, std::int64_t n, const PrecisionContext& ctx) {
  check_indices(j, k, genus_of(n));
  const Precision wp = ctx.working_bits();
  const Real modulus = exp(log_beta(Rational(2 * j - 1, 2 * n), Rational(1, 2), ctx)) * 2 / n;
  const Real theta = ctx.constants().pi * Real(Rational(static_cast<std::int64_t>(k) * (2 * j - 1), n), wp);
  return Complex::polar(modulus, theta);
}

Complex quadrature_entry(int j, int k, std::int64_t n, const PrecisionContext& ctx) {
  check_indices(j, k, genus_of(n));
  return root_phase(j, k, n, ctx) * (quadrature_modulus(j, n, ctx) * 2);
}

ComplexMatrix period_matrix_a(std::int64_t n, const PrecisionContext& ctx, EntryPath path) {
  const std::int64_t g = genus_of(n);
  const Precision wp = ctx.working_bits();
  ComplexMatrix a(static_cast<std::size_t>(g), static_cast<std::size_t>(2 * g), wp);
  for (int j = 1; j <= g; ++j) {
    if (path == EntryPath::kBeta) {
      for (int k = 1; k <= 2 * g; ++k) a(j - 1, k - 1) = beta_entry(j, k, n, ctx);
      continue;
    }
    // One quadrature per row; the phases differ only by powers of a_k.
    const Real modulus = quadrature_modulus(j, n, ctx) * 2;
    for (int k = 1; k <= 2 * g; ++k) a(j - 1, k - 1) = root_phase(j, k, n, ctx) * modulus;
  }
  return a;
}

Real numeric_log_det(std::int64_t n, const PrecisionContext& ctx, EntryPath path) {
  return log_determinant(stacked(period_matrix_a(n, ctx, path))).log_abs;
}

Real closed_form_log_det(std::int64_t n, const PrecisionContext& ctx) {
  const std::int64_t g = genus_of(n);
  const auto& k = ctx.constants();
  const Precision wp = ctx.working_bits();
  const Real inner = k.log_2 * g + k.log_pi * g / 2 + period_gamma_sum(n, ctx);
  return inner * 2 - log_of(n, wp) * n / 2;
}

PeriodMatrices period_matrices(const ComplexMatrix& a) {
  const std::size_t g = a.rows();
  if (a.cols() != 2 * g) throw std::invalid_argument("period_matrices: A must be g x 2g");
  const Precision wp = a(0, 0).re.precision();
  PeriodMatrices pm{ComplexMatrix(g, g, wp), ComplexMatrix(g, g, wp)};
  for (std::size_t r = 0; r < g; ++r) {
    Complex running(wp);
    for (std::size_t k = 0; k < g; ++k) {
      // Columns 2k+1 and 2k are A_{., 2(k+1)} and A_{., 2(k+1)-1} in 1-based terms.
      const Complex diff = a(r, 2 * k + 1) - a(r, 2 * k);
      pm.omega1(r, k) = diff;
      pm.omega2(r, k) = running - a(r, 2 * k + 1);
      running += diff;
    }
  }
  return pm;
}

Real bilinear_residual(const PeriodMatrices& pm) {
  return (pm.omega1 * pm.omega2.transpose() - pm.omega2 * pm.omega1.transpose()).max_abs();
}

ComplexMatrix gram_matrix(std::int64_t n, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const PeriodMatrices pm = period_matrices(period_matrix_a(n, ctx));
  ComplexMatrix m = pm.omega1 * pm.omega2.adjoint() - pm.omega2 * pm.omega1.adjoint();
  m *= Complex(Real(wp), Real(Rational(1, 2), wp));
  return m;
}

Real hermitian_residual(const ComplexMatrix& m) { return (m - m.adjoint()).max_abs(); }

bool is_positive_definite(const ComplexMatrix& m, const Real& tol) {
  if (m.rows() != m.cols()) return false;
  const Real scale = max(m.max_abs(), Real(1, m.max_abs().precision()));
  if (hermitian_residual(m) > tol * scale) return false;
  for (const Complex& minor : leading_minors(m)) {
    if (!(minor.re > 0)) return false;
    if (abs(minor.im) > tol * abs(minor.re)) return false;
  }
  return true;
}

ArchimedeanReport archimedean_report(std::int64_t n, const PrecisionContext& ctx) {
  ArchimedeanReport r;
  r.n = n;
  r.g = genus_of(n);
  r.bits = ctx.bits();
  r.log_norm_closed = log_lambda_norm(n, ctx);
  r.log_det_numeric = numeric_log_det(n, ctx, EntryPath::kQuadrature);
  r.log_det_closed = closed_form_log_det(n, ctx);
  r.rel_err = abs(r.log_det_numeric - r.log_det_closed) / abs(r.log_det_closed);
  r.gram_pd = is_positive_definite(gram_matrix(n, ctx), ctx.function_tolerance());
  return r;
}

std::string format_report(const ArchimedeanReport& report, int digits) {
  std::ostringstream os;
  os << "n=" << report.n << '\n'
     << "g=" << report.g << '\n'
     << "bits=" << report.bits << '\n'
     << "log_norm_closed=" << report.log_norm_closed.to_string(digits) << '\n'
     << "log_det_numeric=" << report.log_det_numeric.to_string(digits) << '\n'
     << "rel_err=" << report.rel_err.to_string(6) << '\n'
     << "gram_pd=" << (report.gram_pd ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace falt
