#pragma once

// Decimal constants of the explicit height bounds, kept as exact rationals so
// every comparison sees the printed value and nothing else.

#include "falt/exact.hpp"

namespace falt::bound_constants {

// h - (n/8) log n > -0.975 n
inline const Rational kHeightLowerSlope{975, 1000};
// h - (n/8) log n < (9/64) n log log n - 0.263 n
inline const Rational kLogLogSlope{9, 64};
inline const Rational kHeightUpperSlope{263, 1000};

// sum_{p|n} c_p log p < (9/8) log log n + 0.7405
inline const Rational kPrimeSumLogLog{9, 8};
inline const Rational kPrimeSumConstant{7405, 10000};

// theta(q) >= 0.5972 q for primes q >= 101
inline const Rational kThetaRatio{5972, 10000};
inline constexpr long kThetaDirectLimit = 101;
// log 2n <= 1.631 log n for n >= 3
inline const Rational kLogTwoNRatio{1631, 1000};
// log(1.631 / 0.5972) - log(2)/2 < 0.6582
inline const Rational kOmegaTail{6582, 10000};

// 0.7405 / 8 <= 1.1108 / 12, folds the prime sum into the linear term
inline const Rational kSlopeCorrection{11108, 10000};
// Intermediate upper bound n/8 log n + 9/64 n log log n - 0.8821 n + 1/2 log n + 1.3061
inline const Rational kIntermediateSlope{8821, 10000};
inline const Rational kIntermediateConstant{13061, 10000};
// log n <= 0.3663 n for n >= 3
inline const Rational kLogOverN{3663, 10000};

// phi(n) >= 1.715 log n for n >= 3
inline const Rational kPhiLogFactor{1715, 1000};
// ((n-1-phi(n))/2) log(pi sqrt 2) < 0.7457 n - 1.2788 log n - 0.7456
inline const Rational kRemondSlope{7457, 10000};
inline const Rational kRemondLog{12788, 10000};
inline const Rational kRemondConstant{7456, 10000};
// Combined: -0.1364 n - 0.7788 log n + 0.5605
inline const Rational kCmSlope{1364, 10000};
inline const Rational kCmConstant{5605, 10000};
// Final: (n/8) log n + (9/64) n log log n - 0.136 n
inline const Rational kCmFinalSlope{136, 1000};

}  // namespace falt::bound_constants
