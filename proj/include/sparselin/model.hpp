#pragma once

#include <cstddef>

#include "sparselin/losses.hpp"
#include "sparselin/sparse_core.hpp"

namespace sparselin {

/// Deployable linear predictor p = w.x + b.
struct LinearModel {
  DenseVec w;
  double b = 0.0;
  LossKind loss = LossKind::Squared;

  std::size_t dim() const noexcept { return w.size(); }

  static LinearModel zero(std::size_t dim, LossKind loss) { return {DenseVec(dim), 0.0, loss}; }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

/// w.x + b via the O(k) kernel. Throws DimensionError unless x.dim() == model.dim().
double predict(const LinearModel& model, const SparseVec& x, TouchCounter* counter = nullptr);

/// Like predict() but accepts any x.dim(); indices at or past model.dim() are
/// features never seen in training and contribute nothing.
double predict_extended(const LinearModel& model, const SparseVec& x) noexcept;

}  // namespace sparselin
