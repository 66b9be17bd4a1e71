#include "adp/fits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "adp/utility.hpp"

namespace adp {

namespace {

double trapezoid_mean(const Vector& ts, const Vector& fs) {
  const Index k = ts.size();
  double num = 0.0;
  for (Index i = 0; i + 1 < k; ++i) {
    num += 0.5 * (fs[i] + fs[i + 1]) * (ts[i + 1] - ts[i]);
  }
  return num / (ts[k - 1] - ts[0]);
}

ReferenceFit finish(const SampledCurve& curve, Vector hs, FitKind kind,
                    Loss loss, double bound = 0.0) {
  ReferenceFit fit;
  fit.achieved_loss = discrete_loss(curve.fs, hs, curve.ts, loss);
  fit.hs = std::move(hs);
  fit.kind = kind;
  fit.loss = loss;
  fit.lipschitz_bound = bound;
  return fit;
}

double median_of(std::vector<double> values) {
  const size_t n = values.size();
  auto mid = values.begin() + n / 2;
  std::nth_element(values.begin(), mid, values.end());
  if (n % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(values.begin(), mid);
  return 0.5 * (lo + hi);
}

// Weighted least squares line through (ts, fs).
void weighted_line(const Vector& ts, const Vector& fs, const Vector& w,
                   double& slope, double& intercept) {
  const double sw = w.sum();
  const double mt = w.dot(ts) / sw;
  const double mf = w.dot(fs) / sw;
  double stt = 0.0, stf = 0.0;
  for (Index i = 0; i < ts.size(); ++i) {
    stt += w[i] * (ts[i] - mt) * (ts[i] - mt);
    stf += w[i] * (ts[i] - mt) * (fs[i] - mf);
  }
  slope = stt > 0.0 ? stf / stt : 0.0;
  intercept = mf - slope * mt;
}

}  // namespace

Vector pava_nondecreasing(const Vector& y) {
  const Index n = y.size();
  std::vector<double> value;
  std::vector<Index> count;
  value.reserve(n);
  count.reserve(n);
  for (Index i = 0; i < n; ++i) {
    value.push_back(y[i]);
    count.push_back(1);
    while (value.size() >= 2 && value[value.size() - 2] > value.back()) {
      const double merged = (value[value.size() - 2] * count[count.size() - 2] +
                             value.back() * count.back()) /
                            static_cast<double>(count[count.size() - 2] +
                                                count.back());
      count[count.size() - 2] += count.back();
      value[value.size() - 2] = merged;
      value.pop_back();
      count.pop_back();
    }
  }
  Vector out(n);
  Index pos = 0;
  for (size_t b = 0; b < value.size(); ++b) {
    for (Index r = 0; r < count[b]; ++r) out[pos++] = value[b];
  }
  return out;
}

Vector pava_nondecreasing_l1(const Vector& y) {
  const Index n = y.size();
  struct Block {
    Index lo, hi;  // inclusive index range into y
    double med;
  };
  std::vector<Block> blocks;
  blocks.reserve(n);
  auto block_median = [&](Index lo, Index hi) {
    std::vector<double> vals(y.data() + lo, y.data() + hi + 1);
    return median_of(std::move(vals));
  };
  for (Index i = 0; i < n; ++i) {
    blocks.push_back({i, i, y[i]});
    while (blocks.size() >= 2 &&
           blocks[blocks.size() - 2].med > blocks.back().med) {
      Block top = blocks.back();
      blocks.pop_back();
      blocks.back().hi = top.hi;
      blocks.back().med = block_median(blocks.back().lo, blocks.back().hi);
    }
  }
  Vector out(n);
  for (const Block& b : blocks) {
    for (Index i = b.lo; i <= b.hi; ++i) out[i] = b.med;
  }
  return out;
}

ReferenceFit fit_constant_mean(const SampledCurve& curve, Loss loss) {
  const double mean = trapezoid_mean(curve.ts, curve.fs);
  return finish(curve, Vector::Constant(curve.size(), mean),
                FitKind::constant_mean, loss);
}

ReferenceFit fit_constant_value(const SampledCurve& curve, double value,
                                Loss loss) {
  return finish(curve, Vector::Constant(curve.size(), value),
                FitKind::constant_value, loss);
}

ReferenceFit fit_linear(const SampledCurve& curve, Loss loss) {
  const Vector& ts = curve.ts;
  const Vector& fs = curve.fs;
  const Index k = curve.size();
  double slope, intercept;
  Vector w = Vector::Ones(k);
  weighted_line(ts, fs, w, slope, intercept);
  if (loss == Loss::absolute) {
    // Least absolute deviations by iteratively reweighted least squares,
    // started from the least squares line.
    double prev = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 200; ++iter) {
      double obj = 0.0;
      for (Index i = 0; i < k; ++i) {
        const double r = std::abs(fs[i] - slope * ts[i] - intercept);
        obj += r;
        w[i] = 1.0 / std::max(r, 1e-9);
      }
      if (std::abs(prev - obj) <= 1e-10 * std::max(1.0, prev)) break;
      prev = obj;
      weighted_line(ts, fs, w, slope, intercept);
    }
  }
  Vector hs(k);
  for (Index i = 0; i < k; ++i) hs[i] = slope * ts[i] + intercept;
  return finish(curve, std::move(hs), FitKind::linear, loss);
}

ReferenceFit fit_isotonic(const SampledCurve& curve, Loss loss) {
  const Vector& fs = curve.fs;
  const Index k = curve.size();
  Vector up, down;
  if (loss == Loss::squared) {
    up = pava_nondecreasing(fs);
    down = -pava_nondecreasing(Vector(-fs));
  } else {
    up = pava_nondecreasing_l1(fs);
    down = -pava_nondecreasing_l1(Vector(-fs));
  }
  const double up_loss = discrete_loss(fs, up, curve.ts, loss);
  const double down_loss = discrete_loss(fs, down, curve.ts, loss);
  ReferenceFit fit;
  fit.kind = FitKind::isotonic;
  fit.loss = loss;
  if (up_loss <= down_loss) {
    fit.hs = std::move(up);
    fit.achieved_loss = up_loss;
  } else {
    fit.hs = std::move(down);
    fit.achieved_loss = down_loss;
  }
  (void)k;
  return fit;
}

ReferenceFit fit_lipschitz(const SampledCurve& curve, double bound, Loss loss) {
  if (loss != Loss::squared) {
    throw UnsupportedCombination(
        "the Lipschitz-bounded fit is defined for squared loss only");
  }
  if (!(bound > 0.0)) {
    throw ParameterOutOfRange("Lipschitz bound must be positive");
  }
  const Vector& ts = curve.ts;
  const Vector& y = curve.fs;
  const Index k = curve.size();

  Vector dt(k - 1);
  for (Index i = 0; i + 1 < k; ++i) dt[i] = ts[i + 1] - ts[i];

  // Unknowns: x[0] is the value at the first grid point, x[j] (j >= 1) the
  // slope on segment j, clamped to [-L, L].
  auto apply = [&](const Vector& x) {
    Vector h(k);
    h[0] = x[0];
    for (Index i = 1; i < k; ++i) h[i] = h[i - 1] + dt[i - 1] * x[i];
    return h;
  };
  auto apply_adjoint = [&](const Vector& r) {
    Vector g(k);
    double suffix = 0.0;
    for (Index i = k - 1; i >= 1; --i) {
      suffix += r[i];
      g[i] = dt[i - 1] * suffix;
    }
    g[0] = suffix + r[0];
    return g;
  };
  auto project = [&](Vector x) {
    for (Index i = 1; i < k; ++i) x[i] = std::clamp(x[i], -bound, bound);
    return x;
  };

  // Start at the clamped interpolant: exact whenever the data is feasible.
  Vector x(k);
  x[0] = y[0];
  for (Index i = 1; i < k; ++i) {
    x[i] = std::clamp((y[i] - y[i - 1]) / dt[i - 1], -bound, bound);
  }

  // Step size from a power-iteration estimate of ||A^T A||.
  Vector p = Vector::Ones(k);
  double lambda = 1.0;
  for (int it = 0; it < 30; ++it) {
    Vector q = apply_adjoint(apply(p));
    lambda = q.norm();
    if (lambda <= 0.0) break;
    p = q / lambda;
  }
  const double step = 1.0 / std::max(2.0 * lambda, 1e-12);

  Vector h = apply(x);
  double obj = (h - y).squaredNorm();
  double pg_norm = 0.0;
  bool converged = false;
  for (int iter = 0; iter < 10000; ++iter) {
    Vector grad = 2.0 * apply_adjoint(h - y);
    Vector trial = project(x - step * grad);
    Vector d = trial - x;
    pg_norm = d.norm() / step;
    if (pg_norm == 0.0) {
      converged = true;
      break;
    }
    // Exact line search along the projection-arc direction.
    Vector ad = apply(d);
    const double denom = ad.squaredNorm();
    double alpha = denom > 0.0 ? (y - h).dot(ad) / denom : 1.0;
    alpha = std::clamp(alpha, 0.0, 1.0);
    if (alpha == 0.0) alpha = 1.0;
    x += alpha * d;
    h = apply(x);
    const double next = (h - y).squaredNorm();
    const double decrease = obj - next;
    obj = next;
    if (decrease <= 1e-12 * std::max(obj, 1e-300)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergence(
        "Lipschitz fit did not converge; projected gradient norm " +
        std::to_string(pg_norm));
  }
  return finish(curve, apply(x), FitKind::lipschitz, loss, bound);
}

}  // namespace adp
