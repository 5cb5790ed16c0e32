#pragma once

// Infinite place of y^2 = x(1 - x^n): the closed-form norm of the section
// Lambda_n, and an independent numerical route through the period matrix.
//
// The g x 2g matrix A has entries A_{jk} = 2 * integral_0^{a_k} x^{j-1} dx / sqrt(f)
// with a_k = zeta_n^k, which reduce to
//   A_{jk} = (2/n) B((2j-1)/(2n), 1/2) e^{i pi k (2j-1)/n}.

#include <cstdint>
#include <string>

#include "falt/complex_matrix.hpp"
#include "falt/real.hpp"

namespace falt {

enum class EntryPath { kBeta, kQuadrature };

/// log ||Lambda_n|| = g(4g+2) log pi - 2g log 2 - n(g+1) log n + (8g+4) S(n),
/// g = floor(n/2). Requires n >= 2.
Real log_lambda_norm(std::int64_t n, const PrecisionContext& ctx);
/// Same expression with S(n) supplied by the caller.
Real log_lambda_norm(std::int64_t n, const Real& gamma_sum, const PrecisionContext& ctx);

/// A_{jk} through log-beta; 1 <= j <= g, 1 <= k <= 2g.
Complex beta_entry(int j, int k, std::int64_t n, const PrecisionContext& ctx);

/// A_{jk} by tanh-sinh quadrature of (1/n) t^{(2j-1)/(2n) - 1} (1 - t)^{-1/2}
/// over (0, 1). Throws QuadratureError if the levels stop contracting.
Complex quadrature_entry(int j, int k, std::int64_t n, const PrecisionContext& ctx);

/// The g x 2g matrix A.
ComplexMatrix period_matrix_a(std::int64_t n, const PrecisionContext& ctx, EntryPath path = EntryPath::kBeta);

/// log |det (A over conj(A))|.
Real numeric_log_det(std::int64_t n, const PrecisionContext& ctx, EntryPath path = EntryPath::kBeta);

/// -(n/2) log n + 2 (g log 2 + (g/2) log pi + S(n)).
Real closed_form_log_det(std::int64_t n, const PrecisionContext& ctx);

/// Period matrices rebuilt from the columns of A:
///   Omega1[:, k] = A[:, 2k] - A[:, 2k-1]
///   Omega2[:, k] = -A[:, 2k] + sum_{m<k} (A[:, 2m] - A[:, 2m-1])
struct PeriodMatrices {
  ComplexMatrix omega1;
  ComplexMatrix omega2;
};
PeriodMatrices period_matrices(const ComplexMatrix& a);

/// Largest entry of |Omega1 Omega2^T - Omega2 Omega1^T|.
Real bilinear_residual(const PeriodMatrices& pm);

/// (i/2)(Omega1 conj(Omega2)^T - Omega2 conj(Omega1)^T).
ComplexMatrix gram_matrix(std::int64_t n, const PrecisionContext& ctx);

/// Largest entry of |M - M^*|.
Real hermitian_residual(const ComplexMatrix& m);

/// Hermitian to within `tol` and every leading principal minor real and
/// positive.
bool is_positive_definite(const ComplexMatrix& m, const Real& tol);

struct ArchimedeanReport {
  std::int64_t n = 0;
  std::int64_t g = 0;
  Precision bits = 0;
  Real log_norm_closed;
  Real log_det_numeric;  // quadrature path
  Real log_det_closed;
  Real rel_err;  // |numeric - closed| / |closed|
  bool gram_pd = false;
};

ArchimedeanReport archimedean_report(std::int64_t n, const PrecisionContext& ctx);

/// key=value lines: n, g, bits, log_norm_closed, log_det_numeric, rel_err, gram_pd.
std::string format_report(const ArchimedeanReport& report, int digits = 30);

}  // namespace falt
