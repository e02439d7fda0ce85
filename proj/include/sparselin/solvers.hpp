#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sparselin/dataset.hpp"
#include "sparselin/losses.hpp"
#include "sparselin/model.hpp"
#include "sparselin/sampling.hpp"
#include "sparselin/sparse_core.hpp"

namespace sparselin {

enum class Algorithm { Sgd, Asgd, Casgd };

/// "sgd", "asgd", "casgd".
std::string_view algorithm_name(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm_name(std::string_view name) noexcept;

struct TrainConfig {
  std::uint64_t steps = 0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  LossKind loss = LossKind::Squared;

  /// Throws ConfigError unless steps >= 1 and lambda > 0 (and finite).
  void validate() const;
};

/// Everything the sparse-update algebra keeps between steps.
///
/// The predictor after t steps is never stored. It is recovered on demand:
///   SGD iterate        w_t = -v / (lambda t),            b_t = -a / (lambda t)
///   averaged iterate   w = -(h v - u) / (lambda t),      b = -c / (lambda t)
///   centered iterate   w_t = -(v - a xbar) / (lambda t), b'_t = -r / (lambda t)
///   centered average   w = -(h v - u - c xbar) / (lambda t), b' = -s / (lambda t)
/// where b' is the bias that applies to raw (uncentered) inputs.
struct TrainerState {
  std::uint64_t t = 0;  // completed steps
  DenseVec v;           // gradient sum
  double a = 0.0;       // bias gradient sum
  DenseVec u;           // harmonic gradient sum (averaging only)
  double c = 0.0;       // sum_j a_j / j
  double h = 0.0;       // harmonic number h_t
  DenseVec xbar;        // mean feature vector (centering only)
  double theta = 0.0;   // 1 + |xbar|^2
  double z = 0.0;       // v . xbar, maintained incrementally
  double r = 0.0;       // a theta - z
  double s = 0.0;       // sum_j r_j / j

  // Diagnostics of the most recent step.
  std::size_t last_index = 0;
  double last_prediction = 0.0;
  double last_gradient = 0.0;
};

/// Runs SGD, ASGD or CASGD one step at a time with O(k) work per step.
///
/// Construction does the one-time O(n) (and, for CASGD, O(mk)) setup. The
/// dataset must outlive the trainer. Indices are drawn lazily from the same
/// stream draw_indices() produces.
class Trainer {
 public:
  /// Throws ConfigError, EmptyDatasetError or LabelError on invalid input.
  Trainer(const Dataset& data, const TrainConfig& cfg, Algorithm algo,
          TouchCounter* counter = nullptr);

  /// Performs step t + 1. Throws NonFiniteError if the prediction or gradient
  /// stops being finite.
  void step();

  /// Steps until cfg.steps have been completed, inside a TouchCounter loop scope.
  void run();

  const TrainerState& state() const noexcept { return state_; }
  Algorithm algorithm() const noexcept { return algo_; }
  const TrainConfig& config() const noexcept { return cfg_; }

  /// The current (non-averaged) iterate. For CASGD this is the centered
  /// iterate with its bias converted for raw inputs.
  LinearModel iterate() const;

  /// What the algorithm returns: the last iterate for SGD, the running
  /// average for ASGD and CASGD. One dense pass; requires t >= 1.
  LinearModel model() const;

  /// model() for a trainer that is done: the weights are written over the
  /// gradient-sum storage instead of a fresh vector. Leaves the trainer spent.
  LinearModel take_model() &&;

 private:
  double scale() const;
  double support_squared_norm();
  /// Terms and bias of model(), i.e. w = sum_j coeff_j vec_j.
  std::vector<ScaledVec> model_terms() const;
  double model_bias() const;

  const Dataset& data_;
  TrainConfig cfg_;
  Algorithm algo_;
  TouchCounter* counter_;
  IndexSampler sampler_;
  TrainerState state_;
};

LinearModel sgd_train(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter = nullptr);
LinearModel asgd_train(const Dataset& data, const TrainConfig& cfg,
                       TouchCounter* counter = nullptr);
LinearModel casgd_train(const Dataset& data, const TrainConfig& cfg,
                        TouchCounter* counter = nullptr);
LinearModel train(Algorithm algo, const Dataset& data, const TrainConfig& cfg,
                  TouchCounter* counter = nullptr);

}  // namespace sparselin
