#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Tolerance below which a direction coordinate counts as zero for the
/// sparsity constraint.
inline constexpr double kZeroTol = 1e-10;

/// Base error carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ADP_ERROR_TYPE(Name)                                             \
  struct Name : Error {                                                  \
    explicit Name(const std::string& m) : Error(#Name, m) {}             \
  }

ADP_ERROR_TYPE(ZeroVector);
ADP_ERROR_TYPE(IndexOutOfRange);
ADP_ERROR_TYPE(EqualIndices);
ADP_ERROR_TYPE(DimensionMismatch);
ADP_ERROR_TYPE(ScorerFailure);
ADP_ERROR_TYPE(GenerationFailure);
ADP_ERROR_TYPE(DegenerateData);
ADP_ERROR_TYPE(ParameterOutOfRange);
ADP_ERROR_TYPE(EmptyInterval);
ADP_ERROR_TYPE(DegenerateInterval);
ADP_ERROR_TYPE(TargetOutsideDensity);
ADP_ERROR_TYPE(LengthMismatch);
ADP_ERROR_TYPE(UnsupportedCombination);
ADP_ERROR_TYPE(NonConvergence);
ADP_ERROR_TYPE(ParseError);
ADP_ERROR_TYPE(EmptyFile);
ADP_ERROR_TYPE(AllAxesDegenerate);
ADP_ERROR_TYPE(AssertionFailure);
ADP_ERROR_TYPE(ConfigError);

#undef ADP_ERROR_TYPE

/// Closed plot interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) {
      throw DegenerateInterval("interval requires a < b, got [" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               "]");
    }
  }

  double length() const { return b - a; }
  bool contains(double t) const { return t >= a && t <= b; }
};

/// Feature matrix plus names and exact per-column ranges.
struct Dataset {
  Matrix rows;                             // n x d
  std::vector<std::string> feature_names;  // length d
  Vector mins;
  Vector maxs;

  Index n() const { return rows.rows(); }
  Index d() const { return rows.cols(); }

  /// Builds a dataset from a row matrix, computing mins/maxs column-wise.
  static Dataset from_rows(Matrix rows, std::vector<std::string> names);

  /// Validates all invariants (throws DimensionMismatch / DegenerateData).
  void validate() const;
};

/// A univariate plot: model values on an equally spaced grid over [a, b].
struct SampledCurve {
  Vector ts;
  Vector fs;
  Interval interval;

  SampledCurve(Vector ts_, Vector fs_, Interval interval_);

  Index size() const { return ts.size(); }
};

/// Equally spaced grid over the interval. When the interval straddles zero
/// and k is even, k is bumped to k + 1 so the grid stays symmetric-friendly.
Vector curve_grid(const Interval& interval, int k);

enum class Loss { squared, absolute };

enum class ContrastKind {
  curve_mean,           // reference = uniform expectation of the curve itself
  constant_prediction,  // g(x) = f(x0)
  taylor,               // first-order expansion of f at x0
  flip_attribute,       // g(x) = f(x with one 0/1 attribute flipped)
  other_model,          // an explicitly supplied second model
};

enum class FitKind { constant_mean, constant_value, linear, isotonic, lipschitz };

/// Which utility a run maximizes: a model contrast or a functional-property
/// deviation, together with its loss and parameters.
struct UtilitySpec {
  enum class Family { contrast, property };

  Family family = Family::contrast;
  ContrastKind contrast_kind = ContrastKind::curve_mean;
  FitKind fit_kind = FitKind::isotonic;
  Loss loss = Loss::squared;
  double lipschitz_bound = 0.0;
  int flip_feature = -1;
  std::string contrast_model_uri;  // resolved by the caller for other_model

  static UtilitySpec variance();
  static UtilitySpec constant_contrast(Loss loss = Loss::squared);
  static UtilitySpec taylor_contrast(Loss loss = Loss::squared);
  static UtilitySpec flip_contrast(int feature, Loss loss = Loss::squared);
  static UtilitySpec model_contrast(std::string uri, Loss loss = Loss::squared);
  static UtilitySpec property(FitKind kind, Loss loss = Loss::squared);
  static UtilitySpec lipschitz(double bound, Loss loss = Loss::squared);

  std::string describe() const;
};

std::string to_string(Loss loss);
std::string to_string(ContrastKind kind);
std::string to_string(FitKind kind);

}  // namespace adp
