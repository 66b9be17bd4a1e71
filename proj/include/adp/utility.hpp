#pragma once

#include "adp/fits.hpp"
#include "adp/types.hpp"

namespace adp {

double pointwise_loss(double f, double h, Loss loss);

/// Trapezoid-rule integral of the pointwise loss between two value arrays on
/// the grid ts, divided by (b - a) when normalize is set so that plots over
/// different intervals stay comparable.
double discrete_loss(const Vector& fs, const Vector& hs, const Vector& ts,
                     Loss loss, bool normalize = true);

/// Squared deviation from the curve's own uniform expectation.
double variance_utility(const SampledCurve& curve, bool normalize = true);

/// Integrated loss between a curve and the same plot under a reference
/// model; both curves must share the grid.
double contrast_utility(const SampledCurve& curve, const SampledCurve& contrast,
                        Loss loss, bool normalize = true);

struct PropertyUtility {
  double value = 0.0;
  ReferenceFit fit;
};

/// Minimal integrated loss to the nearest member of the reference class,
/// together with the fitted member for rendering.
PropertyUtility property_utility(const SampledCurve& curve, FitKind kind,
                                 Loss loss, double lipschitz_bound = 0.0,
                                 bool normalize = true);

}  // namespace adp
