#include "adp/types.hpp"

#include <cmath>
#include <sstream>

namespace adp {

Dataset Dataset::from_rows(Matrix rows, std::vector<std::string> names) {
  if (rows.rows() < 1 || rows.cols() < 1) {
    throw DegenerateData("dataset requires n >= 1 and d >= 1");
  }
  if (static_cast<Index>(names.size()) != rows.cols()) {
    throw DimensionMismatch("feature name count does not match column count");
  }
  Dataset data;
  data.mins = rows.colwise().minCoeff();
  data.maxs = rows.colwise().maxCoeff();
  data.rows = std::move(rows);
  data.feature_names = std::move(names);
  return data;
}

void Dataset::validate() const {
  if (n() < 1 || d() < 1) {
    throw DegenerateData("dataset requires n >= 1 and d >= 1");
  }
  if (static_cast<Index>(feature_names.size()) != d() || mins.size() != d() ||
      maxs.size() != d()) {
    throw DimensionMismatch("dataset field lengths do not match d");
  }
  for (Index j = 0; j < d(); ++j) {
    if (mins[j] != rows.col(j).minCoeff() || maxs[j] != rows.col(j).maxCoeff()) {
      throw DegenerateData("mins/maxs are not the exact column ranges");
    }
  }
}

SampledCurve::SampledCurve(Vector ts_, Vector fs_, Interval interval_)
    : ts(std::move(ts_)), fs(std::move(fs_)), interval(interval_) {
  const Index k = ts.size();
  if (k < 3) throw LengthMismatch("a sampled curve needs at least 3 points");
  if (fs.size() != k) throw LengthMismatch("ts and fs lengths differ");
  const double scale = std::max(1.0, interval.length());
  if (std::abs(ts[0] - interval.a) > 1e-12 * scale ||
      std::abs(ts[k - 1] - interval.b) > 1e-12 * scale) {
    throw ParameterOutOfRange("grid does not span the interval");
  }
  const double step = (interval.b - interval.a) / static_cast<double>(k - 1);
  for (Index i = 0; i + 1 < k; ++i) {
    if (std::abs((ts[i + 1] - ts[i]) - step) > 1e-12 * scale) {
      throw ParameterOutOfRange("grid is not equally spaced");
    }
  }
}

Vector curve_grid(const Interval& interval, int k) {
  if (k < 3) throw ParameterOutOfRange("grid size must be at least 3");
  if (interval.a < 0.0 && interval.b > 0.0 && k % 2 == 0) ++k;
  Vector ts(k);
  const double step = interval.length() / static_cast<double>(k - 1);
  for (int i = 0; i < k; ++i) ts[i] = interval.a + step * i;
  ts[k - 1] = interval.b;
  return ts;
}

UtilitySpec UtilitySpec::variance() {
  UtilitySpec s;
  s.family = Family::contrast;
  s.contrast_kind = ContrastKind::curve_mean;
  s.loss = Loss::squared;
  return s;
}

UtilitySpec UtilitySpec::constant_contrast(Loss loss) {
  UtilitySpec s;
  s.family = Family::contrast;
  s.contrast_kind = ContrastKind::constant_prediction;
  s.loss = loss;
  return s;
}

UtilitySpec UtilitySpec::taylor_contrast(Loss loss) {
  UtilitySpec s;
  s.family = Family::contrast;
  s.contrast_kind = ContrastKind::taylor;
  s.loss = loss;
  return s;
}

UtilitySpec UtilitySpec::flip_contrast(int feature, Loss loss) {
  if (feature < 0) throw IndexOutOfRange("flip feature index must be >= 0");
  UtilitySpec s;
  s.family = Family::contrast;
  s.contrast_kind = ContrastKind::flip_attribute;
  s.flip_feature = feature;
  s.loss = loss;
  return s;
}

UtilitySpec UtilitySpec::model_contrast(std::string uri, Loss loss) {
  UtilitySpec s;
  s.family = Family::contrast;
  s.contrast_kind = ContrastKind::other_model;
  s.contrast_model_uri = std::move(uri);
  s.loss = loss;
  return s;
}

UtilitySpec UtilitySpec::property(FitKind kind, Loss loss) {
  UtilitySpec s;
  s.family = Family::property;
  s.fit_kind = kind;
  s.loss = loss;
  return s;
}

UtilitySpec UtilitySpec::lipschitz(double bound, Loss loss) {
  if (!(bound > 0.0)) {
    throw ParameterOutOfRange("Lipschitz bound must be positive");
  }
  UtilitySpec s = property(FitKind::lipschitz, loss);
  s.lipschitz_bound = bound;
  return s;
}

std::string to_string(Loss loss) {
  return loss == Loss::squared ? "squared" : "absolute";
}

std::string to_string(ContrastKind kind) {
  switch (kind) {
    case ContrastKind::curve_mean: return "curve-mean";
    case ContrastKind::constant_prediction: return "constant-prediction";
    case ContrastKind::taylor: return "taylor";
    case ContrastKind::flip_attribute: return "flip-attribute";
    case ContrastKind::other_model: return "other-model";
  }
  return "?";
}

std::string to_string(FitKind kind) {
  switch (kind) {
    case FitKind::constant_mean: return "constant-mean";
    case FitKind::constant_value: return "constant-value";
    case FitKind::linear: return "linear";
    case FitKind::isotonic: return "isotonic";
    case FitKind::lipschitz: return "lipschitz";
  }
  return "?";
}

std::string UtilitySpec::describe() const {
  std::ostringstream out;
  if (family == Family::contrast) {
    out << "contrast:" << to_string(contrast_kind);
    if (contrast_kind == ContrastKind::flip_attribute) {
      out << ":" << flip_feature;
    }
    if (contrast_kind == ContrastKind::other_model) {
      out << ":" << contrast_model_uri;
    }
  } else {
    out << "property:" << to_string(fit_kind);
    if (fit_kind == FitKind::lipschitz) out << ":" << lipschitz_bound;
  }
  out << ":" << to_string(loss);
  return out.str();
}

}  // namespace adp
