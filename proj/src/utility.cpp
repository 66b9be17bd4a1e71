#include "adp/utility.hpp"

#include <cmath>

namespace adp {

double pointwise_loss(double f, double h, Loss loss) {
  const double r = f - h;
  return loss == Loss::squared ? r * r : std::abs(r);
}

double discrete_loss(const Vector& fs, const Vector& hs, const Vector& ts,
                     Loss loss, bool normalize) {
  const Index k = fs.size();
  if (hs.size() != k || ts.size() != k) {
    throw LengthMismatch("loss inputs must have equal length");
  }
  if (k < 2) throw LengthMismatch("loss needs at least two grid points");
  double acc = 0.0;
  double prev = pointwise_loss(fs[0], hs[0], loss);
  for (Index i = 1; i < k; ++i) {
    const double cur = pointwise_loss(fs[i], hs[i], loss);
    acc += 0.5 * (prev + cur) * (ts[i] - ts[i - 1]);
    prev = cur;
  }
  return normalize ? acc / (ts[k - 1] - ts[0]) : acc;
}

double variance_utility(const SampledCurve& curve, bool normalize) {
  const ReferenceFit fit = fit_constant_mean(curve, Loss::squared);
  return discrete_loss(curve.fs, fit.hs, curve.ts, Loss::squared, normalize);
}

double contrast_utility(const SampledCurve& curve, const SampledCurve& contrast,
                        Loss loss, bool normalize) {
  if (curve.size() != contrast.size()) {
    throw LengthMismatch("contrast curve has a different grid size");
  }
  if ((curve.ts - contrast.ts).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, curve.interval.length())) {
    throw ParameterOutOfRange("contrast curve sampled on a different grid");
  }
  return discrete_loss(curve.fs, contrast.fs, curve.ts, loss, normalize);
}

PropertyUtility property_utility(const SampledCurve& curve, FitKind kind,
                                 Loss loss, double lipschitz_bound,
                                 bool normalize) {
  ReferenceFit fit;
  switch (kind) {
    case FitKind::constant_mean:
      fit = fit_constant_mean(curve, loss);
      break;
    case FitKind::linear:
      fit = fit_linear(curve, loss);
      break;
    case FitKind::isotonic:
      fit = fit_isotonic(curve, loss);
      break;
    case FitKind::lipschitz:
      fit = fit_lipschitz(curve, lipschitz_bound, loss);
      break;
    case FitKind::constant_value:
      throw UnsupportedCombination(
          "constant-value is a rendering fit, not a property class");
  }
  PropertyUtility out;
  out.value = normalize ? fit.achieved_loss
                        : fit.achieved_loss * curve.interval.length();
  out.fit = std::move(fit);
  return out;
}

}  // namespace adp
