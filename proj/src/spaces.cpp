#include "adp/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace adp {

AffineGenerativeMap::AffineGenerativeMap(Vector mean, Matrix basis,
                                         Vector latent_stddev)
    : mean_(std::move(mean)),
      basis_(std::move(basis)),
      latent_stddev_(std::move(latent_stddev)) {
  if (basis_.rows() != mean_.size() ||
      latent_stddev_.size() != basis_.cols()) {
    throw DimensionMismatch("affine map field shapes disagree");
  }
  const Matrix gram = basis_.transpose() * basis_;
  if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() >
      1e-8) {
    throw DegenerateData("basis columns are not orthonormal");
  }
}

AffineGenerativeMap AffineGenerativeMap::fit(const Dataset& data,
                                             Index latent_dim) {
  const Index n = data.n();
  const Index d = data.d();
  if (latent_dim < 1 || latent_dim > std::min(n - 1, d)) {
    throw ParameterOutOfRange("latent dimension must lie in [1, min(n-1, d)]");
  }
  const Vector mean = data.rows.colwise().mean();
  const Matrix centered = data.rows.rowwise() - mean.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  if (eig.info() != Eigen::Success) {
    throw DegenerateData("eigendecomposition failed");
  }
  // Eigenvalues ascend; take the top latent_dim and check rank.
  const Vector& values = eig.eigenvalues();
  const double lead = std::max(values[d - 1], 0.0);
  Matrix basis(d, latent_dim);
  for (Index c = 0; c < latent_dim; ++c) {
    const Index src = d - 1 - c;
    if (values[src] <= 1e-12 * std::max(lead, 1.0)) {
      throw DegenerateData("covariance rank below the requested latent size");
    }
    Vector col = eig.eigenvectors().col(src);
    // Deterministic sign: largest-magnitude component positive.
    Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    if (col[arg] < 0.0) col = -col;
    basis.col(c) = col;
  }
  const Matrix latents = centered * basis;
  Vector stddev(latent_dim);
  for (Index c = 0; c < latent_dim; ++c) {
    stddev[c] = n > 1 ? std::sqrt(latents.col(c).squaredNorm() /
                                  static_cast<double>(n - 1))
                      : 1.0;
    if (!(stddev[c] > 0.0)) stddev[c] = 1.0;
  }
  return AffineGenerativeMap(mean, std::move(basis), std::move(stddev));
}

Vector AffineGenerativeMap::decode(const Vector& z) const {
  if (z.size() != latent_dim()) {
    throw DimensionMismatch("latent vector has wrong dimension");
  }
  return mean_ + basis_ * z;
}

Vector AffineGenerativeMap::encode(const Vector& x) const {
  if (x.size() != ambient_dim()) {
    throw DimensionMismatch("ambient vector has wrong dimension");
  }
  return basis_.transpose() * (x - mean_);
}

Vector GainTransform::apply(const Vector& x, double v) const {
  if (v == 0.0) return x;
  return x * (1.0 + amplitude_ * v);
}

Vector OffsetTransform::apply(const Vector& x, double v) const {
  if (v == 0.0) return x;
  return x.array() + amplitude_ * v;
}

ClampTransform::ClampTransform(Vector mins, Vector maxs)
    : mins_(std::move(mins)), maxs_(std::move(maxs)) {
  if (mins_.size() != maxs_.size()) {
    throw DimensionMismatch("clamp range lengths differ");
  }
}

Vector ClampTransform::apply(const Vector& x, double v) const {
  if (v == 0.0) return x;
  if (x.size() != mins_.size()) {
    throw DimensionMismatch("clamp input has wrong dimension");
  }
  Vector out = x;
  for (Index j = 0; j < x.size(); ++j) {
    const double center = 0.5 * (mins_[j] + maxs_[j]);
    const double half = 0.5 * (maxs_[j] - mins_[j]) * (1.0 - v);
    out[j] = std::clamp(out[j], center - half, center + half);
  }
  return out;
}

SmoothTransform::SmoothTransform(int radius) : radius_(radius) {
  if (radius < 1) throw ParameterOutOfRange("smoothing radius must be >= 1");
}

Vector SmoothTransform::apply(const Vector& x, double v) const {
  if (v == 0.0) return x;
  const Index d = x.size();
  Vector ma(d);
  for (Index j = 0; j < d; ++j) {
    double acc = 0.0;
    int count = 0;
    for (int r = -radius_; r <= radius_; ++r) {
      const Index idx = std::clamp<Index>(j + r, 0, d - 1);
      acc += x[idx];
      ++count;
    }
    ma[j] = acc / count;
  }
  return (1.0 - v) * x + v * ma;
}

std::vector<std::string> TransformPipeline::names() const {
  std::vector<std::string> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s->name());
  return out;
}

Vector TransformPipeline::apply(const Vector& x0, const Vector& v,
                                double t) const {
  if (v.size() != size()) {
    throw DimensionMismatch("strength vector length does not match pipeline");
  }
  if (t < 0.0 || t > 1.0) {
    throw ParameterOutOfRange("pipeline parameter t outside [0, 1]");
  }
  Vector x = x0;
  for (Index i = 0; i < size(); ++i) {
    if (v[i] < 0.0 || v[i] > 1.0) {
      throw ParameterOutOfRange("transform strength outside [0, 1]");
    }
    x = steps_[i]->apply(x, v[i] * t);
  }
  return x;
}

Vector compose_transforms(const TransformPipeline& pipeline, const Vector& x0,
                          const Vector& v, double t) {
  return pipeline.apply(x0, v, t);
}

}  // namespace adp
