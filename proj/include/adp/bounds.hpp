#pragma once

#include <optional>

#include "adp/direction.hpp"
#include "adp/types.hpp"

namespace adp {

/// Per-feature box taken from a dataset's exact column ranges.
struct BoxBound {
  Vector mins;
  Vector maxs;

  static BoxBound of(const Dataset& data) { return {data.mins, data.maxs}; }
  Index dim() const { return mins.size(); }
  bool contains(const Vector& x) const;
};

/// Multivariate Gaussian density with a squared-Mahalanobis threshold taken
/// from a training quantile. The covariance is ridge-regularized so the
/// threshold geometry stays well posed on degenerate data.
class GaussianDensity {
 public:
  GaussianDensity(Vector mean, Matrix covariance, double threshold);

  /// Fits mean and covariance to the dataset rows; the threshold is the
  /// `quantile`-quantile of the training squared Mahalanobis distances.
  static GaussianDensity fit(const Dataset& data, double quantile = 0.95,
                             double ridge_scale = 1e-6);

  double sq_mahalanobis(const Vector& x) const;
  double threshold() const { return threshold_; }
  const Vector& mean() const { return mean_; }
  const Matrix& covariance() const { return covariance_; }
  Index dim() const { return mean_.size(); }

  /// Solves the inverse-covariance system for a vector.
  Vector solve(const Vector& rhs) const;

 private:
  Vector mean_;
  Matrix covariance_;
  Eigen::LLT<Matrix> llt_;
  double threshold_;
};

/// Maximal [a, b] with x0 + t v inside the closed box for all t in [a, b].
Interval line_box_interval(const Vector& x0, const Direction& v,
                           const BoxBound& box);

/// Root interval of the quadratic (x0 + t v - mu)' Sigma^-1 (x0 + t v - mu)
/// <= c; the target itself must satisfy the threshold.
Interval line_density_interval(const Vector& x0, const Direction& v,
                               const GaussianDensity& density);

/// Box interval intersected with the density interval when one is given.
Interval plot_interval(const Vector& x0, const Direction& v,
                       const BoxBound& box,
                       const GaussianDensity* density = nullptr);

/// Intersection of per-instance box (and density) intervals over a row set;
/// used for direction plots averaged over instances.
Interval pooled_plot_interval(const Matrix& rows, const Direction& v,
                              const BoxBound& box,
                              const GaussianDensity* density = nullptr);

}  // namespace adp
