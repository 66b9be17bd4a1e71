#include "adp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace adp {

namespace {
constexpr double kDegenerateWidth = 1e-9;
}

bool BoxBound::contains(const Vector& x) const {
  if (x.size() != dim()) {
    throw DimensionMismatch("point dimension does not match box");
  }
  for (Index j = 0; j < dim(); ++j) {
    if (x[j] < mins[j] || x[j] > maxs[j]) return false;
  }
  return true;
}

GaussianDensity::GaussianDensity(Vector mean, Matrix covariance,
                                 double threshold)
    : mean_(std::move(mean)),
      covariance_(std::move(covariance)),
      threshold_(threshold) {
  if (covariance_.rows() != mean_.size() ||
      covariance_.cols() != mean_.size()) {
    throw DimensionMismatch("covariance shape does not match mean");
  }
  if (!(threshold_ > 0.0)) {
    throw ParameterOutOfRange("density threshold must be positive");
  }
  llt_.compute(covariance_);
  if (llt_.info() != Eigen::Success) {
    throw DegenerateData("covariance is not positive definite");
  }
}

GaussianDensity GaussianDensity::fit(const Dataset& data, double quantile,
                                     double ridge_scale) {
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw ParameterOutOfRange("density quantile must lie in (0, 1)");
  }
  const Index n = data.n();
  const Index d = data.d();
  const Vector mean = data.rows.colwise().mean();
  Matrix centered = data.rows.rowwise() - mean.transpose();
  Matrix cov = Matrix::Zero(d, d);
  if (n > 1) {
    cov = centered.transpose() * centered / static_cast<double>(n - 1);
  }
  const double ridge =
      std::max(ridge_scale * cov.trace() / static_cast<double>(d),
               ridge_scale);
  cov += ridge * Matrix::Identity(d, d);

  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw DegenerateData("covariance is not positive definite after ridge");
  }
  std::vector<double> sq(n);
  for (Index i = 0; i < n; ++i) {
    const Vector diff = centered.row(i);
    sq[i] = diff.dot(llt.solve(diff));
  }
  std::sort(sq.begin(), sq.end());
  const Index rank = std::min<Index>(
      n - 1, std::max<Index>(0, static_cast<Index>(
                                    std::ceil(quantile * n)) - 1));
  double threshold = sq[rank];
  if (!(threshold > 0.0)) threshold = ridge;  // all rows identical
  return GaussianDensity(mean, std::move(cov), threshold);
}

double GaussianDensity::sq_mahalanobis(const Vector& x) const {
  if (x.size() != dim()) {
    throw DimensionMismatch("point dimension does not match density");
  }
  const Vector diff = x - mean_;
  return diff.dot(llt_.solve(diff));
}

Vector GaussianDensity::solve(const Vector& rhs) const {
  return llt_.solve(rhs);
}

Interval line_box_interval(const Vector& x0, const Direction& v,
                           const BoxBound& box) {
  if (x0.size() != box.dim() || v.dim() != box.dim()) {
    throw DimensionMismatch("box interval inputs disagree on dimension");
  }
  if (!box.contains(x0)) {
    throw EmptyInterval("target lies outside the box");
  }
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& [j, w] : v.entries()) {
    const double to_min = (box.mins[j] - x0[j]) / w;
    const double to_max = (box.maxs[j] - x0[j]) / w;
    lo = std::max(lo, std::min(to_min, to_max));
    hi = std::min(hi, std::max(to_min, to_max));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DegenerateData("direction has no stored coordinates");
  }
  if (hi - lo < kDegenerateWidth) {
    throw DegenerateInterval("box interval narrower than 1e-9");
  }
  return Interval(lo, hi);
}

Interval line_density_interval(const Vector& x0, const Direction& v,
                               const GaussianDensity& density) {
  if (x0.size() != density.dim() || v.dim() != density.dim()) {
    throw DimensionMismatch("density interval inputs disagree on dimension");
  }
  const Vector diff = x0 - density.mean();
  const Vector vd = v.dense();
  const Vector sv = density.solve(vd);
  const Vector sd = density.solve(diff);
  const double alpha = vd.dot(sv);
  const double beta = 2.0 * vd.dot(sd);
  const double gamma = diff.dot(sd) - density.threshold();
  if (gamma > 0.0) {
    throw TargetOutsideDensity(
        "target squared Mahalanobis distance exceeds the threshold");
  }
  if (!(alpha > 0.0)) {
    throw DegenerateData("direction has zero Mahalanobis length");
  }
  const double disc = std::sqrt(std::max(0.0, beta * beta - 4.0 * alpha * gamma));
  const double lo = (-beta - disc) / (2.0 * alpha);
  const double hi = (-beta + disc) / (2.0 * alpha);
  if (hi - lo < kDegenerateWidth) {
    throw DegenerateInterval("density interval narrower than 1e-9");
  }
  return Interval(lo, hi);
}

Interval plot_interval(const Vector& x0, const Direction& v,
                       const BoxBound& box, const GaussianDensity* density) {
  Interval iv = line_box_interval(x0, v, box);
  if (density != nullptr) {
    const Interval dv = line_density_interval(x0, v, *density);
    const double lo = std::max(iv.a, dv.a);
    const double hi = std::min(iv.b, dv.b);
    if (hi - lo < kDegenerateWidth) {
      throw DegenerateInterval("combined interval narrower than 1e-9");
    }
    return Interval(lo, hi);
  }
  return iv;
}

Interval pooled_plot_interval(const Matrix& rows, const Direction& v,
                              const BoxBound& box,
                              const GaussianDensity* density) {
  if (rows.rows() < 1) throw DegenerateData("empty instance set");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < rows.rows(); ++i) {
    const Interval iv = plot_interval(rows.row(i), v, box, density);
    lo = std::max(lo, iv.a);
    hi = std::min(hi, iv.b);
  }
  if (hi - lo < kDegenerateWidth) {
    throw DegenerateInterval("pooled interval narrower than 1e-9");
  }
  return Interval(lo, hi);
}

}  // namespace adp
