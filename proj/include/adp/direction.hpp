#pragma once

#include <map>
#include <vector>

#include "adp/types.hpp"

namespace adp {

/// Sparse unit vector over raw, latent, or transform-parameter coordinates.
/// Immutable; every stored weight satisfies |w| > kZeroTol and the Euclidean
/// norm is 1 within 1e-12.
class Direction {
 public:
  using Entries = std::map<Index, double>;

  Direction() = default;

  Index dim() const { return dim_; }
  const Entries& entries() const { return entries_; }
  Index support_size() const { return static_cast<Index>(entries_.size()); }

  std::vector<Index> support() const;

  /// Coefficient at index i (0 when not stored).
  double coeff(Index i) const;

  Vector dense() const;

  /// Sparse dot product with a dense vector of matching dimension.
  double dot(const Vector& x) const;

  /// |<v, other>| is the recovery metric used by the harness.
  double cosine(const Direction& other) const;

  /// True when every stored weight is strictly positive (transform spaces
  /// only admit such directions).
  bool nonnegative() const;

  bool operator==(const Direction& other) const;

  friend Direction make_direction(const Entries& weights, Index dim);
  friend Direction givens_rotate(const Direction& v, Index i, Index j,
                                 double theta);

 private:
  Direction(Entries entries, Index dim)
      : entries_(std::move(entries)), dim_(dim) {}

  Entries entries_;
  Index dim_ = 0;
};

/// Normalizes a sparse weight map into a Direction. Weights that fall at or
/// below kZeroTol after normalization are dropped and the rest re-normalized.
Direction make_direction(const Direction::Entries& weights, Index dim);

Direction axis_direction(Index i, Index dim);

/// Applies the planar rotation on coordinates (i, j):
///   v_i' = cos(theta) v_i - sin(theta) v_j
///   v_j' = sin(theta) v_i + cos(theta) v_j
/// All other coordinates are untouched; post-rotation weights at or below
/// kZeroTol are dropped.
Direction givens_rotate(const Direction& v, Index i, Index j, double theta);

}  // namespace adp
