#pragma once

// Double-exponential (tanh-sinh) quadrature on (0, 1) for integrands with
// integrable power-law endpoint singularities.

#include <functional>
#include <stdexcept>
#include <string>

#include "falt/real.hpp"

namespace falt {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A node of the tanh-sinh rule with both distances to the endpoints carried
/// separately, so 1 - t keeps full relative accuracy near t = 1.
struct UnitNode {
  const Real& t;
  const Real& one_minus_t;
  const Real& log_t;
  const Real& log_one_minus_t;
};

using UnitIntegrand = std::function<Real(const UnitNode&)>;

struct QuadratureResult {
  Real value;
  Real error_estimate;  // |S_L - S_{L-1}| at the accepted level
  int level;            // step h = 2^-level
};

/// Integrates f over (0, 1) at `bits` precision, halving the step until two
/// successive levels agree to `relative_target`. Throws QuadratureError when
/// `max_level` is reached first.
QuadratureResult tanh_sinh_unit(const UnitIntegrand& f, const Real& relative_target, Precision bits,
                                int max_level = 12);

}  // namespace falt
