#include "reference_oracle.hpp"

#include <cmath>
#include <functional>

namespace sparselin::oracle {

namespace {

using Visitor = std::function<void(const std::vector<double>& w, double b, double p)>;

// Runs the dense recurrence. `shift` (possibly empty) is subtracted from every
// densified example.
void run_dense(const Dataset& data, const TrainConfig& cfg, const std::vector<double>& shift,
               TouchCounter* counter, const Visitor& visit) {
  cfg.validate();
  const std::size_t n = data.dim();
  const auto indices = draw_indices(cfg.seed, cfg.steps, data.size());
  std::vector<double> w(n, 0.0);
  double b = 0.0;
  TouchCounter::LoopScope loop(counter);
  for (std::uint64_t t = 1; t <= cfg.steps; ++t) {
    const Example& ex = data[indices[t - 1]];
    auto x = to_dense(ex.x);
    if (!shift.empty()) {
      for (std::size_t i = 0; i < n; ++i) x[i] -= shift[i];
    }
    double p = b;
    for (std::size_t i = 0; i < n; ++i) p += w[i] * x[i];
    const double g = loss_subgradient(cfg.loss, p, ex.y);
    if (!std::isfinite(p) || !std::isfinite(g)) throw NonFiniteError("oracle diverged");
    const double td = static_cast<double>(t);
    const double decay = 1.0 - 1.0 / td;
    const double step = g / (cfg.lambda * td);
    for (std::size_t i = 0; i < n; ++i) w[i] = decay * w[i] - step * x[i];
    b = decay * b - step;
    // densify, predict, update
    if (counter != nullptr) counter->charge_dense(3 * n);
    visit(w, b, p);
  }
}

DenseTrace collect(const Dataset& data, const TrainConfig& cfg, const std::vector<double>& shift,
                   TouchCounter* counter) {
  DenseTrace trace;
  trace.iterates.reserve(cfg.steps);
  trace.predictions.reserve(cfg.steps);
  run_dense(data, cfg, shift, counter, [&](const std::vector<double>& w, double b, double p) {
    trace.iterates.push_back({w, b});
    trace.predictions.push_back(p);
  });
  return trace;
}

}  // namespace

std::vector<double> to_dense(const SparseVec& x) {
  std::vector<double> out(x.dim(), 0.0);
  for (const auto& e : x) out[e.index] = e.value;
  return out;
}

std::vector<double> dense_mean(const Dataset& data) {
  std::vector<double> mean(data.dim(), 0.0);
  for (const auto& ex : data) {
    const auto x = to_dense(ex.x);
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += x[i];
  }
  for (auto& value : mean) value /= static_cast<double>(data.size());
  return mean;
}

DenseTrace dense_sgd(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  return collect(data, cfg, {}, counter);
}

DenseIterate dense_sgd_last(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  DenseIterate last;
  run_dense(data, cfg, {}, counter, [&](const std::vector<double>& w, double b, double) {
    last.w = w;
    last.b = b;
  });
  return last;
}

DenseIterate average_prefix(const DenseTrace& trace, std::size_t t) {
  DenseIterate avg{std::vector<double>(trace.iterates.front().w.size(), 0.0), 0.0};
  for (std::size_t j = 0; j < t; ++j) {
    const auto& it = trace.iterates[j];
    for (std::size_t i = 0; i < avg.w.size(); ++i) avg.w[i] += it.w[i];
    avg.b += it.b;
  }
  for (auto& value : avg.w) value /= static_cast<double>(t);
  avg.b /= static_cast<double>(t);
  return avg;
}

LinearModel to_model(const DenseIterate& it, LossKind loss) {
  return {DenseVec(it.w), it.b, loss};
}

LinearModel dense_asgd(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  const auto trace = dense_sgd(data, cfg, counter);
  return to_model(average_prefix(trace, trace.iterates.size()), cfg.loss);
}

DenseTrace dense_centered_sgd(const Dataset& data, const TrainConfig& cfg,
                              std::vector<double>* mean_out, TouchCounter* counter) {
  const auto mean = dense_mean(data);
  if (mean_out != nullptr) *mean_out = mean;
  return collect(data, cfg, mean, counter);
}

LinearModel dense_casgd(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  std::vector<double> mean;
  const auto trace = dense_centered_sgd(data, cfg, &mean, counter);
  auto avg = average_prefix(trace, trace.iterates.size());
  double shift = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) shift += avg.w[i] * mean[i];
  avg.b -= shift;
  return to_model(avg, cfg.loss);
}

}  // namespace sparselin::oracle
