#include "adp/model.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "adp/utility.hpp"

namespace adp {

namespace {

class CallbackScorer final : public Scorer {
 public:
  CallbackScorer(Index dim, std::function<double(const Vector&)> fn)
      : dim_(dim), fn_(std::move(fn)) {}

  Vector score(const Matrix& points) override {
    Vector out(points.rows());
    for (Index i = 0; i < points.rows(); ++i) out[i] = fn_(points.row(i));
    return out;
  }
  Index dim() const override { return dim_; }

 private:
  Index dim_;
  std::function<double(const Vector&)> fn_;
};

class FlipScorer final : public Scorer {
 public:
  FlipScorer(ModelHandle base, Index attribute)
      : base_(std::move(base)), attribute_(attribute) {}

  Vector score(const Matrix& points) override {
    Matrix flipped = points;
    flipped.col(attribute_) = Vector::Ones(points.rows()) - points.col(attribute_);
    return base_.evaluate_batch(flipped);
  }
  Index dim() const override { return base_.dim(); }
  ConcurrencyClass concurrency() const override {
    return base_.concurrency_class();
  }

 private:
  ModelHandle base_;
  Index attribute_;
};

}  // namespace

ModelHandle::ModelHandle(std::shared_ptr<Scorer> scorer)
    : scorer_(std::move(scorer)) {}

Vector ModelHandle::evaluate_batch(const Matrix& points) const {
  if (!scorer_) throw ScorerFailure("evaluating an empty model handle");
  if (points.cols() != scorer_->dim()) {
    throw DimensionMismatch("batch has " + std::to_string(points.cols()) +
                            " columns, model expects " +
                            std::to_string(scorer_->dim()));
  }
  Vector scores;
  if (scorer_->concurrency() == ConcurrencyClass::serialized) {
    std::lock_guard<std::mutex> lock(*gate_);
    scores = scorer_->score(points);
  } else {
    scores = scorer_->score(points);
  }
  if (scores.size() != points.rows()) {
    throw ScorerFailure("scorer returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(points.rows()) +
                        " instances");
  }
  count_->fetch_add(points.rows());
  return scores;
}

double ModelHandle::evaluate(const Vector& x) const {
  Matrix m(1, x.size());
  m.row(0) = x;
  return evaluate_batch(m)[0];
}

Index ModelHandle::dim() const {
  if (!scorer_) throw ScorerFailure("querying an empty model handle");
  return scorer_->dim();
}

ConcurrencyClass ModelHandle::concurrency_class() const {
  if (!scorer_) throw ScorerFailure("querying an empty model handle");
  return scorer_->concurrency();
}

ModelHandle make_linear_model(double intercept, Vector coefficients) {
  const Index d = coefficients.size();
  if (d < 1) throw DegenerateData("linear model needs at least one coefficient");
  return ModelHandle(std::make_shared<CallbackScorer>(
      d, [intercept, c = std::move(coefficients)](const Vector& x) {
        return intercept + c.dot(x);
      }));
}

ModelHandle make_quadratic_model(double intercept, Vector linear,
                                 Vector quad_diag) {
  const Index d = linear.size();
  if (d < 1 || quad_diag.size() != d) {
    throw DimensionMismatch("quadratic model coefficient lengths differ");
  }
  return ModelHandle(std::make_shared<CallbackScorer>(
      d, [intercept, a = std::move(linear), b = std::move(quad_diag)](
             const Vector& x) {
        return intercept + a.dot(x) + b.dot(x.cwiseProduct(x));
      }));
}

ModelHandle make_synthetic_sin_model(Index dim, Vector beta) {
  if (dim < 2) throw DegenerateData("sin model needs dimension >= 2");
  if (beta.size() != dim - 2) {
    throw DimensionMismatch("beta must have length dim - 2");
  }
  return ModelHandle(std::make_shared<CallbackScorer>(
      dim, [b = std::move(beta)](const Vector& x) {
        double tail = 0.0;
        for (Index j = 0; j < b.size(); ++j) tail += b[j] * x[j + 2];
        return std::sin(2.0 * x[0]) + std::cos(3.0 * x[1]) + tail;
      }));
}

ModelHandle make_constant_model(Index dim, double value) {
  return ModelHandle(std::make_shared<CallbackScorer>(
      dim, [value](const Vector&) { return value; }));
}

ModelHandle make_callback_model(Index dim,
                                std::function<double(const Vector&)> fn) {
  return ModelHandle(std::make_shared<CallbackScorer>(dim, std::move(fn)));
}

ModelHandle constant_contrast(const ModelHandle& m, const Vector& x0) {
  return make_constant_model(m.dim(), m.evaluate(x0));
}

ModelHandle taylor_contrast(const ModelHandle& m, const Vector& x0,
                            double step) {
  const Index d = m.dim();
  if (x0.size() != d) throw DimensionMismatch("target has wrong dimension");
  Matrix probes(2 * d + 1, d);
  for (Index j = 0; j < d; ++j) {
    const double h = step > 0.0 ? step : 1e-4 * (1.0 + std::abs(x0[j]));
    probes.row(2 * j) = x0;
    probes(2 * j, j) = x0[j] + h;
    probes.row(2 * j + 1) = x0;
    probes(2 * j + 1, j) = x0[j] - h;
  }
  probes.row(2 * d) = x0;
  const Vector values = m.evaluate_batch(probes);
  Vector grad(d);
  for (Index j = 0; j < d; ++j) {
    const double h = probes(2 * j, j) - x0[j];
    grad[j] = (values[2 * j] - values[2 * j + 1]) / (2.0 * h);
  }
  const double f0 = values[2 * d];
  return ModelHandle(std::make_shared<CallbackScorer>(
      d, [f0, g = std::move(grad), x0](const Vector& x) {
        return f0 + g.dot(x - x0);
      }));
}

ModelHandle flip_attribute_contrast(const ModelHandle& m, Index attribute) {
  if (attribute < 0 || attribute >= m.dim()) {
    throw IndexOutOfRange("flip attribute outside model dimension");
  }
  return ModelHandle(std::make_shared<FlipScorer>(m, attribute));
}

namespace {

double eval_odd_poly(const Vector& coefs, double u) {
  const double u2 = u * u;
  return u * (coefs[0] + u2 * (coefs[1] + u2 * coefs[2]));
}

// Normalized monotonicity utility of p over a symmetric window [-w, w].
double window_utility(const Vector& coefs, double w, int k = 51) {
  Interval iv(-w, w);
  Vector ts = curve_grid(iv, k);
  Vector fs(ts.size());
  for (Index i = 0; i < ts.size(); ++i) fs[i] = eval_odd_poly(coefs, ts[i]);
  SampledCurve curve(std::move(ts), std::move(fs), iv);
  return property_utility(curve, FitKind::isotonic, Loss::squared).value;
}

// Monotonicity utility of the full model along an axis from the origin over
// the unit box.
double axis_utility(const RandomNonMonotoneModel& model, Index j) {
  Interval iv(-1.0, 1.0);
  Vector ts = curve_grid(iv, 51);
  Vector fs(ts.size());
  Vector x = Vector::Zero(model.dim);
  for (Index i = 0; i < ts.size(); ++i) {
    x[j] = ts[i];
    fs[i] = model.handle.evaluate(x);
  }
  SampledCurve curve(std::move(ts), std::move(fs), iv);
  return property_utility(curve, FitKind::isotonic, Loss::squared).value;
}

}  // namespace

RandomNonMonotoneModel make_random_nonmonotone_model(std::uint64_t seed,
                                                     Index dim,
                                                     int support_size) {
  if (support_size < 1 || support_size > 3) {
    throw ParameterOutOfRange("support size must be 1, 2, or 3");
  }
  if (dim < support_size) {
    throw DimensionMismatch("dimension smaller than requested support");
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const double root_s = std::sqrt(static_cast<double>(support_size));
  const double w_max = root_s;  // box-exit window of the planted direction

  for (int attempt = 0; attempt < 100; ++attempt) {
    // Support: a uniform subset; weights: equal magnitude, random signs, so
    // the planted direction is the unique maximizer of the plot window it
    // can reach inside the unit box.
    std::vector<Index> all(dim);
    std::iota(all.begin(), all.end(), Index{0});
    for (int i = 0; i < support_size; ++i) {
      std::uniform_int_distribution<Index> pick(i, dim - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    std::vector<Index> support(all.begin(), all.begin() + support_size);
    std::sort(support.begin(), support.end());

    Direction::Entries entries;
    std::bernoulli_distribution coin(0.5);
    for (Index j : support) entries[j] = coin(rng) ? 1.0 : -1.0;

    // p(u) = scale * u (u^2 - a^2)(u^2 - b^2): odd, with interior extrema
    // placed relative to the reachable window.
    std::uniform_real_distribution<double> ua(0.40, 0.55);
    std::uniform_real_distribution<double> ub(0.80, 0.95);
    std::uniform_real_distribution<double> uscale(0.5, 2.0);
    const double a = ua(rng) * w_max;
    const double b = ub(rng) * w_max;
    const double scale = (coin(rng) ? 1.0 : -1.0) * uscale(rng);
    Vector coefs(3);
    coefs[0] = scale * a * a * b * b;
    coefs[1] = -scale * (a * a + b * b);
    coefs[2] = scale;

    RandomNonMonotoneModel model;
    model.seed = seed;
    model.dim = dim;
    model.support = support;
    model.planted = make_direction(entries, dim);
    model.poly_odd = coefs;
    model.background_coef = 0.01;

    const Vector w = model.planted.dense();
    std::vector<char> in_support(dim, 0);
    for (Index j : support) in_support[j] = 1;
    const double c = model.background_coef;
    model.handle = make_callback_model(
        dim, [coefs, w, in_support, c](const Vector& x) {
          double u = 0.0, off = 0.0;
          for (Index j = 0; j < x.size(); ++j) {
            if (in_support[j]) {
              u += w[j] * x[j];
            } else {
              off += x[j];
            }
          }
          return eval_odd_poly(coefs, u) + c * off;
        });

    // The utility along the planted direction must be visible from a single
    // axis and keep improving at each support-growing milestone, and the
    // full window must be the global maximum over reachable windows.
    bool ok = true;
    double prev = 0.0;
    std::vector<double> milestones;
    for (int j = 1; j <= support_size; ++j) {
      milestones.push_back(static_cast<double>(j) / root_s);
    }
    for (size_t i = 0; i < milestones.size(); ++i) {
      const double u = window_utility(coefs, milestones[i]);
      if (i == 0 && u < 1e-5) ok = false;
      if (i > 0 && u < prev * 1.05) ok = false;
      prev = u;
      if (!ok) break;
    }
    const double planted_utility = window_utility(coefs, w_max);
    if (ok && support_size > 1) {
      // Any direction whose support leaves the planted set reaches a window
      // of at most (s - 1)/sqrt(s); the planted window must dominate all of
      // those with a margin.
      const double rival_max = (support_size - 1) / root_s;
      for (int g = 1; g <= 16; ++g) {
        const double wg = 0.15 * w_max + (rival_max - 0.15 * w_max) * g / 16.0;
        if (window_utility(coefs, wg) * 1.02 > planted_utility) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      // Required margin: the planted direction must dominate every axis
      // outside the support by 10x.
      for (Index j = 0; j < dim && ok; ++j) {
        if (in_support[j]) continue;
        if (planted_utility <= 10.0 * axis_utility(model, j)) ok = false;
      }
    }
    if (ok) return model;
  }
  throw GenerationFailure(
      "no acceptable random non-monotone model in 100 attempts");
}

}  // namespace adp
