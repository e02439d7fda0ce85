#include "sparselin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "sparselin/data_io.hpp"
#include "sparselin/solvers.hpp"

namespace sparselin::cli {

namespace {

struct TrainArgs {
  std::string data;
  std::string model;
  std::string algo;
  std::string loss;
  double lambda = 0.0;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> dim;
};

struct PredictArgs {
  std::string model;
  std::string data;
  std::string out;
};

struct EvalArgs {
  std::string model;
  std::string data;
  double lambda = 0.0;
};

int cmd_train(const TrainArgs& args, std::ostream& out) {
  const auto algo = parse_algorithm_name(args.algo);
  if (!algo) throw ConfigError("--algo must be one of sgd, asgd, casgd (got '" + args.algo + "')");
  const auto loss = parse_loss_name(args.loss);
  if (!loss) {
    throw ConfigError("--loss must be one of absolute, squared, hinge, log (got '" + args.loss +
                      "')");
  }
  if (!(args.lambda > 0.0) || !std::isfinite(args.lambda)) {
    throw ConfigError("--lambda must be a finite value > 0");
  }
  if (args.steps < 1) throw ConfigError("--steps must be >= 1");

  const Dataset data = load_libsvm(args.data, args.dim);
  validate_labels(data, *loss);
  const TrainConfig cfg{args.steps, args.lambda, args.seed, *loss};
  const LinearModel model = train(*algo, data, cfg);
  save_model(model, args.model);

  out << "trained algo=" << algorithm_name(*algo) << " loss=" << loss_name(*loss)
      << " lambda=" << format_double(args.lambda) << " T=" << args.steps << " seed=" << args.seed
      << " objective=" << format_double(objective_value(model, data, args.lambda)) << '\n';
  return kSuccess;
}

int cmd_predict(const PredictArgs& args, std::ostream& out) {
  const LinearModel model = load_model(args.model);
  const Dataset data = load_libsvm(args.data, std::nullopt, /*labels_optional=*/true);
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary);
    if (!file) throw FormatError("cannot open output file '" + args.out + "'");
  }
  std::ostream& sink = args.out.empty() ? out : file;
  for (const auto& ex : data) sink << format_double(predict_extended(model, ex.x)) << '\n';
  if (!sink) throw FormatError("failed writing predictions");
  return kSuccess;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  if (!(args.lambda > 0.0) || !std::isfinite(args.lambda)) {
    throw ConfigError("--lambda must be a finite value > 0");
  }
  const LinearModel model = load_model(args.model);
  const Dataset data = load_libsvm(args.data);
  const double avg = average_loss(model, data);
  out << "avg_loss=" << format_double(avg)
      << " objective=" << format_double(regularizer_value(model, args.lambda) + avg);
  if (is_classification(model.loss)) {
    std::size_t correct = 0;
    for (const auto& ex : data) {
      const double p = predict_extended(model, ex.x);
      if ((p > 0.0 && ex.y > 0.0) || (p < 0.0 && ex.y < 0.0)) ++correct;
    }
    out << " accuracy=" << format_double(static_cast<double>(correct) /
                                         static_cast<double>(data.size()));
  }
  out << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse SGD / ASGD / CASGD trainer for L2-regularized linear models", "sparselin"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Train a model on a LIBSVM file");
  train_cmd->add_option("--data", train_args.data, "Training data (LIBSVM format)")->required();
  train_cmd->add_option("--model", train_args.model, "Output model path")->required();
  train_cmd->add_option("--algo", train_args.algo, "sgd, asgd or casgd")->required();
  train_cmd->add_option("--loss", train_args.loss, "absolute, squared, hinge or log")->required();
  train_cmd->add_option("--lambda", train_args.lambda, "Regularization parameter (> 0)")
      ->required();
  train_cmd->add_option("--steps", train_args.steps, "Number of SGD steps T (>= 1)")->required();
  train_cmd->add_option("--seed", train_args.seed, "Sampler seed")->required();
  train_cmd->add_option("--dim", train_args.dim, "Feature dimension override");

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "Write one raw prediction per example");
  predict_cmd->add_option("--model", predict_args.model, "Model file")->required();
  predict_cmd->add_option("--data", predict_args.data, "Input data (LIBSVM format)")->required();
  predict_cmd->add_option("--out", predict_args.out, "Output path (default: stdout)");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Report average loss and objective");
  eval_cmd->add_option("--model", eval_args.model, "Model file")->required();
  eval_cmd->add_option("--data", eval_args.data, "Labeled data (LIBSVM format)")->required();
  eval_cmd->add_option("--lambda", eval_args.lambda, "Regularization parameter (> 0)")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrDataError;
  }

  try {
    if (*train_cmd) return cmd_train(train_args, out);
    if (*predict_cmd) return cmd_predict(predict_args, out);
    return cmd_eval(eval_args, out);
  } catch (const NonFiniteError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrDataError;
  }
}

}  // namespace sparselin::cli
