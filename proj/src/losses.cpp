#include "sparselin/losses.hpp"

#include <string>

#include "sparselin/dataset.hpp"
#include "sparselin/model.hpp"

namespace sparselin {

namespace {

void require_label(LossKind kind, double y) {
  if (!label_valid(kind, y)) {
    throw LabelError(std::string(loss_name(kind)) + " loss requires labels in {-1, +1}, got " +
                     std::to_string(y));
  }
}

}  // namespace

std::string_view loss_name(LossKind kind) noexcept {
  switch (kind) {
    case LossKind::Absolute:
      return "absolute";
    case LossKind::Squared:
      return "squared";
    case LossKind::Hinge:
      return "hinge";
    case LossKind::Log:
      return "log";
  }
  return "unknown";
}

std::optional<LossKind> parse_loss_name(std::string_view name) noexcept {
  if (name == "absolute") return LossKind::Absolute;
  if (name == "squared") return LossKind::Squared;
  if (name == "hinge") return LossKind::Hinge;
  if (name == "log") return LossKind::Log;
  return std::nullopt;
}

bool label_valid(LossKind kind, double y) noexcept {
  if (is_classification(kind)) return y == 1.0 || y == -1.0;
  return std::isfinite(y);
}

void validate_labels(const Dataset& data, LossKind kind) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!label_valid(kind, data[i].y)) {
      throw LabelError("example " + std::to_string(i + 1) + ": label " +
                       std::to_string(data[i].y) + " is not valid for " +
                       std::string(loss_name(kind)) + " loss");
    }
  }
}

double loss_value(LossKind kind, double p, double y) {
  require_label(kind, y);
  return detail::loss_value_unchecked(kind, p, y);
}

double loss_subgradient(LossKind kind, double p, double y) {
  require_label(kind, y);
  return detail::loss_subgradient_unchecked(kind, p, y);
}

double regularizer_value(const LinearModel& model, double lambda) {
  return 0.5 * lambda * (squared_norm(model.w) + model.b * model.b);
}

double average_loss(const LinearModel& model, const Dataset& data) {
  if (data.empty()) throw EmptyDatasetError("average loss over an empty dataset");
  validate_labels(data, model.loss);
  double sum = 0.0;
  for (const auto& ex : data) {
    sum += detail::loss_value_unchecked(model.loss, predict_extended(model, ex.x), ex.y);
  }
  return sum / static_cast<double>(data.size());
}

double objective_value(const LinearModel& model, const Dataset& data, double lambda) {
  if (model.dim() != data.dim()) {
    throw DimensionError("model dimension " + std::to_string(model.dim()) +
                         " does not match dataset dimension " + std::to_string(data.dim()));
  }
  if (!(lambda > 0.0)) throw ConfigError("lambda must be > 0");
  return regularizer_value(model, lambda) + average_loss(model, data);
}

double predict(const LinearModel& model, const SparseVec& x, TouchCounter* counter) {
  return dot(model.w, x, counter) + model.b;
}

double predict_extended(const LinearModel& model, const SparseVec& x) noexcept {
  double sum = 0.0;
  for (const auto& e : x) {
    if (e.index >= model.dim()) break;
    sum += model.w[e.index] * e.value;
  }
  return sum + model.b;
}

}  // namespace sparselin
