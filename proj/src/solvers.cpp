#include "sparselin/solvers.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace sparselin {

std::string_view algorithm_name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::Sgd:
      return "sgd";
    case Algorithm::Asgd:
      return "asgd";
    case Algorithm::Casgd:
      return "casgd";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm_name(std::string_view name) noexcept {
  if (name == "sgd") return Algorithm::Sgd;
  if (name == "asgd") return Algorithm::Asgd;
  if (name == "casgd") return Algorithm::Casgd;
  return std::nullopt;
}

void TrainConfig::validate() const {
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be > 0");
}

namespace {

const Dataset& checked(const Dataset& data, const TrainConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw EmptyDatasetError("cannot train on an empty dataset");
  validate_labels(data, cfg.loss);
  return data;
}

}  // namespace

Trainer::Trainer(const Dataset& data, const TrainConfig& cfg, Algorithm algo,
                 TouchCounter* counter)
    : data_(checked(data, cfg)),
      cfg_(cfg),
      algo_(algo),
      counter_(counter),
      sampler_(cfg.seed, data.size()) {
  const std::size_t n = data.dim();
  // One fused zero-fill for every dense vector the algorithm keeps.
  const std::size_t count = algo_ == Algorithm::Sgd ? 1 : algo_ == Algorithm::Asgd ? 2 : 3;
  auto vecs = zero_accumulators(n, count, counter_);
  state_.v = std::move(vecs[0]);
  if (count >= 2) state_.u = std::move(vecs[1]);
  if (algo_ == Algorithm::Casgd) {
    state_.xbar = std::move(vecs[2]);
    accumulate_mean(data_, state_.xbar, counter_);
    state_.theta = 1.0 + support_squared_norm();
  }
}

double Trainer::support_squared_norm() {
  // xbar is zero outside the union of the example supports, so |xbar|^2 is a
  // sum over that union. u is still all zero here and serves as the "already
  // counted" mark; a second sparse sweep clears it again.
  auto& xbar = state_.xbar;
  auto& mark = state_.u;
  double sum = 0.0;
  for (const auto& ex : data_) {
    for (const auto& e : ex.x) {
      if (mark[e.index] == 0.0) {
        sum += xbar[e.index] * xbar[e.index];
        mark[e.index] = 1.0;
      }
    }
    if (counter_ != nullptr) counter_->charge_sparse(ex.x.nnz());
  }
  for (const auto& ex : data_) {
    for (const auto& e : ex.x) mark[e.index] = 0.0;
    if (counter_ != nullptr) counter_->charge_sparse(ex.x.nnz());
  }
  return sum;
}

void Trainer::step() {
  auto& st = state_;
  const std::size_t idx = sampler_.next();
  const Example& ex = data_[idx];
  const std::uint64_t t = st.t + 1;
  const bool averaged = algo_ != Algorithm::Sgd;
  const bool centered = algo_ == Algorithm::Casgd;

  double p = 0.0;
  double q = 0.0;
  if (centered) q = dot(st.xbar, ex.x, counter_);
  if (t > 1) {
    const double d = dot(st.v, ex.x, counter_);
    const double numer = centered ? d + st.r - st.a * q : d + st.a;
    p = -numer / (cfg_.lambda * static_cast<double>(t - 1));
  }
  const double g = detail::loss_subgradient_unchecked(cfg_.loss, p, ex.y);
  if (!std::isfinite(p) || !std::isfinite(g)) {
    throw NonFiniteError("non-finite prediction or gradient at step " + std::to_string(t) +
                         " (lambda too small or data out of range?)");
  }

  axpy(st.v, g, ex.x, counter_);
  st.a += g;
  if (averaged) {
    if (t == 1) {
      st.c = st.a;
      st.h = 1.0;
    } else {
      // u takes the harmonic number from before this step.
      axpy(st.u, st.h * g, ex.x, counter_);
      const double inv_t = 1.0 / static_cast<double>(t);
      st.c += st.a * inv_t;
      st.h += inv_t;
    }
  }
  if (centered) {
    st.z += g * q;
    st.r = st.a * st.theta - st.z;
    st.s += st.r / static_cast<double>(t);
  }

  st.t = t;
  st.last_index = idx;
  st.last_prediction = p;
  st.last_gradient = g;
}

void Trainer::run() {
  TouchCounter::LoopScope loop(counter_);
  while (state_.t < cfg_.steps) step();
}

double Trainer::scale() const {
  if (state_.t == 0) throw ConfigError("no training steps have been taken");
  return -1.0 / (cfg_.lambda * static_cast<double>(state_.t));
}

LinearModel Trainer::iterate() const {
  const double k = scale();
  const auto& st = state_;
  if (algo_ == Algorithm::Casgd) {
    return {finalize_combine({{k, st.v}, {-k * st.a, st.xbar}}, counter_), k * st.r, cfg_.loss};
  }
  return {finalize_combine({{k, st.v}}, counter_), k * st.a, cfg_.loss};
}

std::vector<ScaledVec> Trainer::model_terms() const {
  const double k = scale();
  const auto& st = state_;
  switch (algo_) {
    case Algorithm::Sgd:
      return {{k, st.v}};
    case Algorithm::Asgd:
      return {{k * st.h, st.v}, {-k, st.u}};
    case Algorithm::Casgd:
      return {{k * st.h, st.v}, {-k, st.u}, {-k * st.c, st.xbar}};
  }
  return {{k, st.v}};
}

double Trainer::model_bias() const {
  const double k = scale();
  switch (algo_) {
    case Algorithm::Sgd:
      return k * state_.a;
    case Algorithm::Asgd:
      return k * state_.c;
    case Algorithm::Casgd:
      return k * state_.s;
  }
  return k * state_.a;
}

LinearModel Trainer::model() const {
  return {finalize_combine(model_terms(), counter_), model_bias(), cfg_.loss};
}

LinearModel Trainer::take_model() && {
  const auto terms = model_terms();
  const double bias = model_bias();
  finalize_combine_into(state_.v, terms, counter_);
  return {std::move(state_.v), bias, cfg_.loss};
}

LinearModel train(Algorithm algo, const Dataset& data, const TrainConfig& cfg,
                  TouchCounter* counter) {
  Trainer trainer(data, cfg, algo, counter);
  trainer.run();
  return std::move(trainer).take_model();
}

LinearModel sgd_train(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  return train(Algorithm::Sgd, data, cfg, counter);
}

LinearModel asgd_train(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  return train(Algorithm::Asgd, data, cfg, counter);
}

LinearModel casgd_train(const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
  return train(Algorithm::Casgd, data, cfg, counter);
}

}  // namespace sparselin
