#include "adp/direction.hpp"

#include <cmath>

namespace adp {

namespace {

double entries_norm(const Direction::Entries& entries) {
  double sq = 0.0;
  for (const auto& [idx, w] : entries) sq += w * w;
  return std::sqrt(sq);
}

Direction::Entries normalized(Direction::Entries entries) {
  double norm = entries_norm(entries);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ZeroVector("direction weights are numerically zero");
  }
  for (auto& [idx, w] : entries) w /= norm;
  // Drop coordinates that normalization exposed as negligible, then
  // renormalize so the unit-norm invariant holds exactly.
  for (auto it = entries.begin(); it != entries.end();) {
    if (std::abs(it->second) <= kZeroTol) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  if (entries.empty()) {
    throw ZeroVector("all direction weights fall below the zero tolerance");
  }
  norm = entries_norm(entries);
  for (auto& [idx, w] : entries) w /= norm;
  return entries;
}

}  // namespace

std::vector<Index> Direction::support() const {
  std::vector<Index> idx;
  idx.reserve(entries_.size());
  for (const auto& [i, w] : entries_) idx.push_back(i);
  return idx;
}

double Direction::coeff(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? 0.0 : it->second;
}

Vector Direction::dense() const {
  Vector v = Vector::Zero(dim_);
  for (const auto& [i, w] : entries_) v[i] = w;
  return v;
}

double Direction::dot(const Vector& x) const {
  if (x.size() != dim_) {
    throw DimensionMismatch("direction/vector dimension mismatch");
  }
  double s = 0.0;
  for (const auto& [i, w] : entries_) s += w * x[i];
  return s;
}

double Direction::cosine(const Direction& other) const {
  if (other.dim_ != dim_) {
    throw DimensionMismatch("direction dimension mismatch");
  }
  double s = 0.0;
  for (const auto& [i, w] : entries_) s += w * other.coeff(i);
  return s;
}

bool Direction::nonnegative() const {
  for (const auto& [i, w] : entries_) {
    if (w < 0.0) return false;
  }
  return true;
}

bool Direction::operator==(const Direction& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

Direction make_direction(const Direction::Entries& weights, Index dim) {
  if (dim < 1) throw IndexOutOfRange("direction dimension must be >= 1");
  if (weights.empty()) throw ZeroVector("no direction weights given");
  for (const auto& [i, w] : weights) {
    if (i < 0 || i >= dim) {
      throw IndexOutOfRange("direction index " + std::to_string(i) +
                            " outside dimension " + std::to_string(dim));
    }
  }
  return Direction(normalized(weights), dim);
}

Direction axis_direction(Index i, Index dim) {
  return make_direction({{i, 1.0}}, dim);
}

Direction givens_rotate(const Direction& v, Index i, Index j, double theta) {
  if (i == j) throw EqualIndices("rotation coordinates must differ");
  if (i < 0 || j < 0 || i >= v.dim() || j >= v.dim()) {
    throw IndexOutOfRange("rotation coordinate outside dimension");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double vi = v.coeff(i);
  const double vj = v.coeff(j);
  Direction::Entries entries = v.entries();
  const double ri = c * vi - s * vj;
  const double rj = s * vi + c * vj;
  if (std::abs(ri) > kZeroTol) {
    entries[i] = ri;
  } else {
    entries.erase(i);
  }
  if (std::abs(rj) > kZeroTol) {
    entries[j] = rj;
  } else {
    entries.erase(j);
  }
  if (entries.empty()) {
    throw ZeroVector("rotation produced a numerically zero vector");
  }
  return Direction(std::move(entries), v.dim());
}

}  // namespace adp
