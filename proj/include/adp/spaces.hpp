#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adp/types.hpp"

namespace adp {

/// Map between a latent code space and the ambient feature space. decode is
/// the generator, encode its (approximate) inverse.
class GenerativeMap {
 public:
  virtual ~GenerativeMap() = default;
  virtual Vector decode(const Vector& z) const = 0;
  virtual Vector encode(const Vector& x) const = 0;
  virtual Index latent_dim() const = 0;
  virtual Index ambient_dim() const = 0;

  /// Per-coordinate standard deviation of the training latents; defaults to
  /// ones when the map has no training data attached.
  virtual Vector latent_stddev() const {
    return Vector::Ones(latent_dim());
  }

  double reconstruction_residual(const Vector& x) const {
    return (decode(encode(x)) - x).norm();
  }
};

/// PCA map: decode(z) = mean + B z with a column-orthonormal basis of top
/// principal directions. The sign of each basis vector is fixed so its
/// largest-magnitude component is positive.
class AffineGenerativeMap final : public GenerativeMap {
 public:
  AffineGenerativeMap(Vector mean, Matrix basis, Vector latent_stddev);

  static AffineGenerativeMap fit(const Dataset& data, Index latent_dim);

  Vector decode(const Vector& z) const override;
  Vector encode(const Vector& x) const override;
  Index latent_dim() const override { return basis_.cols(); }
  Index ambient_dim() const override { return basis_.rows(); }
  Vector latent_stddev() const override { return latent_stddev_; }

  const Matrix& basis() const { return basis_; }
  const Vector& mean() const { return mean_; }

 private:
  Vector mean_;
  Matrix basis_;
  Vector latent_stddev_;
};

/// One parameterized input transform. v ranges over [0, 1] and v = 0 must
/// reproduce the input bit-exactly.
class Transform {
 public:
  virtual ~Transform() = default;
  virtual Vector apply(const Vector& x, double v) const = 0;
  virtual std::string name() const = 0;
};

/// x -> x * (1 + amplitude v)
class GainTransform final : public Transform {
 public:
  explicit GainTransform(double amplitude = 1.0) : amplitude_(amplitude) {}
  Vector apply(const Vector& x, double v) const override;
  std::string name() const override { return "gain"; }

 private:
  double amplitude_;
};

/// x -> x + amplitude v (every coordinate shifted)
class OffsetTransform final : public Transform {
 public:
  explicit OffsetTransform(double amplitude = 1.0) : amplitude_(amplitude) {}
  Vector apply(const Vector& x, double v) const override;
  std::string name() const override { return "offset"; }

 private:
  double amplitude_;
};

/// Clamps to a box shrunk toward its center by factor v.
class ClampTransform final : public Transform {
 public:
  ClampTransform(Vector mins, Vector maxs);
  Vector apply(const Vector& x, double v) const override;
  std::string name() const override { return "clamp"; }

 private:
  Vector mins_, maxs_;
};

/// Blends toward a centered moving average: x -> (1 - v) x + v ma(x).
class SmoothTransform final : public Transform {
 public:
  explicit SmoothTransform(int radius = 1);
  Vector apply(const Vector& x, double v) const override;
  std::string name() const override { return "smooth"; }

 private:
  int radius_;
};

/// Ordered composition of parameterized transforms; the plot parameter t
/// scales every per-transform strength v_i.
class TransformPipeline {
 public:
  TransformPipeline() = default;
  explicit TransformPipeline(
      std::vector<std::shared_ptr<const Transform>> steps)
      : steps_(std::move(steps)) {}

  void add(std::shared_ptr<const Transform> step) {
    steps_.push_back(std::move(step));
  }

  Index size() const { return static_cast<Index>(steps_.size()); }
  std::vector<std::string> names() const;

  /// Applies the steps in order, step i at strength v_i * t. All v_i and t
  /// must lie in [0, 1].
  Vector apply(const Vector& x0, const Vector& v, double t) const;

 private:
  std::vector<std::shared_ptr<const Transform>> steps_;
};

/// Free-function form of pipeline composition at parameter v * t.
Vector compose_transforms(const TransformPipeline& pipeline, const Vector& x0,
                          const Vector& v, double t);

}  // namespace adp
