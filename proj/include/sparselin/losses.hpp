#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>

#include "sparselin/errors.hpp"

namespace sparselin {

class Dataset;
struct LinearModel;

enum class LossKind { Absolute, Squared, Hinge, Log };

/// CLI/model-file spelling: "absolute", "squared", "hinge", "log".
std::string_view loss_name(LossKind kind) noexcept;
std::optional<LossKind> parse_loss_name(std::string_view name) noexcept;

/// Hinge and log loss are binary classification losses with labels in {-1, +1}.
constexpr bool is_classification(LossKind kind) noexcept {
  return kind == LossKind::Hinge || kind == LossKind::Log;
}

bool label_valid(LossKind kind, double y) noexcept;

/// Throws LabelError naming the first example whose label is invalid for kind.
void validate_labels(const Dataset& data, LossKind kind);

/// l(p, y). Throws LabelError if y is not a valid label for kind.
double loss_value(LossKind kind, double p, double y);

/// l'(p, y) with respect to p. At the kinks the lower branch is taken:
/// absolute returns -1 when p <= y, hinge returns -y when p*y <= 1.
double loss_subgradient(LossKind kind, double p, double y);

namespace detail {

// Unchecked variants for the training loop; labels are validated up front.

inline double stable_sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double loss_value_unchecked(LossKind kind, double p, double y) noexcept {
  switch (kind) {
    case LossKind::Absolute:
      return std::abs(p - y);
    case LossKind::Squared:
      return 0.5 * (p - y) * (p - y);
    case LossKind::Hinge:
      return std::max(1.0 - p * y, 0.0);
    case LossKind::Log: {
      const double margin = p * y;
      if (margin >= 0.0) return std::log1p(std::exp(-margin));
      return -margin + std::log1p(std::exp(margin));
    }
  }
  return 0.0;
}

inline double loss_subgradient_unchecked(LossKind kind, double p, double y) noexcept {
  switch (kind) {
    case LossKind::Absolute:
      return p <= y ? -1.0 : 1.0;
    case LossKind::Squared:
      return p - y;
    case LossKind::Hinge:
      return p * y <= 1.0 ? -y : 0.0;
    case LossKind::Log:
      return -y * stable_sigmoid(-p * y);
  }
  return 0.0;
}

}  // namespace detail

/// F(w, b) = (lambda/2)(|w|^2 + b^2) + (1/m) sum_i l(w.x_i + b, y_i).
/// Requires model.dim() == data.dim() and lambda > 0.
double objective_value(const LinearModel& model, const Dataset& data, double lambda);

/// (1/m) sum_i l(p_i, y_i) where features beyond the model dimension carry zero
/// weight. Requires a nonempty dataset with labels valid for the model loss.
double average_loss(const LinearModel& model, const Dataset& data);

/// (lambda/2)(|w|^2 + b^2).
double regularizer_value(const LinearModel& model, double lambda);

}  // namespace sparselin
