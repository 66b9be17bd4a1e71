#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "adp/direction.hpp"
#include "adp/types.hpp"

namespace adp {

enum class ConcurrencyClass { pure, serialized };

/// Batch scoring backend. Implementations must be deterministic: the same
/// batch always yields identical scores.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual Vector score(const Matrix& points) = 0;
  virtual Index dim() const = 0;
  virtual ConcurrencyClass concurrency() const { return ConcurrencyClass::pure; }
};

/// Shared handle to a scorer with evaluation accounting. Copies share the
/// scorer and the counter. Serialized scorers are gated by a mutex so only
/// one batch is in flight at a time.
class ModelHandle {
 public:
  ModelHandle() = default;
  explicit ModelHandle(std::shared_ptr<Scorer> scorer);

  /// Scores one instance per row; advances the counter by the batch size.
  Vector evaluate_batch(const Matrix& points) const;
  double evaluate(const Vector& x) const;

  Index dim() const;
  ConcurrencyClass concurrency_class() const;
  long long eval_count() const { return count_->load(); }
  bool valid() const { return scorer_ != nullptr; }

 private:
  std::shared_ptr<Scorer> scorer_;
  std::shared_ptr<std::atomic<long long>> count_ =
      std::make_shared<std::atomic<long long>>(0);
  std::shared_ptr<std::mutex> gate_ = std::make_shared<std::mutex>();
};

ModelHandle make_linear_model(double intercept, Vector coefficients);
ModelHandle make_quadratic_model(double intercept, Vector linear,
                                 Vector quad_diag);

/// f(x) = sin(2 x0) + cos(3 x1) + beta . x_{2:}, beta of length dim - 2.
ModelHandle make_synthetic_sin_model(Index dim, Vector beta);

ModelHandle make_constant_model(Index dim, double value);

ModelHandle make_callback_model(Index dim,
                                std::function<double(const Vector&)> fn);

/// g(x) = f(x0) for all x. Evaluates f once at construction.
ModelHandle constant_contrast(const ModelHandle& m, const Vector& x0);

/// First-order expansion g(x) = f(x0) + grad . (x - x0) with a central
/// finite-difference gradient. Uses 2d + 1 evaluations of f at construction.
/// step <= 0 selects the default per-coordinate step 1e-4 * (1 + |x0_j|).
ModelHandle taylor_contrast(const ModelHandle& m, const Vector& x0,
                            double step = 0.0);

/// g(x) = f(x with the 0/1 attribute at `attribute` replaced by 1 - value).
ModelHandle flip_attribute_contrast(const ModelHandle& m, Index attribute);

/// A seeded model p(w . x_S) + c * sum of off-support coordinates, where p is
/// an odd-degree polynomial that is non-monotone inside the unit-box plot
/// window and w is a planted sparse direction. Generation re-samples until
/// the planted direction's monotonicity utility dominates every off-support
/// axis and keeps growing toward full support, so the planted direction is
/// the identifiable optimum.
struct RandomNonMonotoneModel {
  std::uint64_t seed = 0;
  Index dim = 0;
  std::vector<Index> support;
  Direction planted;
  Vector poly_odd;  // coefficients of u, u^3, u^5
  double background_coef = 0.01;
  ModelHandle handle;
};

RandomNonMonotoneModel make_random_nonmonotone_model(std::uint64_t seed,
                                                     Index dim,
                                                     int support_size);

}  // namespace adp
