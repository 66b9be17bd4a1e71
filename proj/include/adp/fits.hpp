#pragma once

#include "adp/types.hpp"

namespace adp {

/// Best approximation to a curve within a univariate reference class,
/// evaluated on the curve's own grid.
struct ReferenceFit {
  Vector hs;
  FitKind kind = FitKind::constant_mean;
  Loss loss = Loss::squared;
  double lipschitz_bound = 0.0;
  double achieved_loss = 0.0;  // normalized discrete loss vs the curve
};

/// Constant fit at the trapezoid-weighted mean of the curve (the uniform
/// expectation over [a, b]).
ReferenceFit fit_constant_mean(const SampledCurve& curve,
                               Loss loss = Loss::squared);

/// Constant fit at an externally chosen value.
ReferenceFit fit_constant_value(const SampledCurve& curve, double value,
                                Loss loss = Loss::squared);

/// Least squares line, or least absolute deviations via IRLS under
/// absolute loss.
ReferenceFit fit_linear(const SampledCurve& curve, Loss loss = Loss::squared);

/// Best monotone fit: pool-adjacent-violators run for the nondecreasing and
/// the nonincreasing class; the lower-loss branch wins, ties favoring
/// nondecreasing. Squared loss pools block means, absolute loss block
/// medians.
ReferenceFit fit_isotonic(const SampledCurve& curve, Loss loss = Loss::squared);

/// Best fit whose consecutive slopes are bounded by L in magnitude, via the
/// cumulative-increment least squares problem with box constraints solved by
/// projected gradient with exact line search. Squared loss only.
ReferenceFit fit_lipschitz(const SampledCurve& curve, double bound,
                           Loss loss = Loss::squared);

/// Nondecreasing least squares fit of y (uniform weights).
Vector pava_nondecreasing(const Vector& y);

/// Nondecreasing least absolute deviation fit of y (block medians).
Vector pava_nondecreasing_l1(const Vector& y);

}  // namespace adp
