#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sparselin/cli.hpp"
#include "sparselin/data_io.hpp"

namespace fs = std::filesystem;
using namespace sparselin;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sparselin_cli_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = {}) const {
    const auto p = path_ / name;
    if (!contents.empty()) std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> train_args(const std::string& data, const std::string& model,
                                    const std::string& algo, const std::string& loss = "squared",
                                    const std::string& lambda = "1",
                                    const std::string& steps = "1") {
  return {"train", "--algo", algo,  "--loss",  loss,  "--lambda", lambda,
          "--steps", steps,  "--seed", "0", "--data", data, "--model",  model};
}

}  // namespace

TEST_CASE("cli train sgd on a single example") {
  TempDir dir;
  const auto data = dir.file("one.svm", "2 1:1\n");
  const auto model = dir.file("model.txt");
  const auto r = run_cli(train_args(data, model, "sgd"));
  REQUIRE(r.code == 0);
  CHECK(slurp(model) == "sparselin-model v1\nloss squared\ndim 1\nbias 2\n0:2\n");
  // objective = (1/2)(4 + 4) + (1/2)(4 - 2)^2 = 6
  CHECK(r.out == "trained algo=sgd loss=squared lambda=1 T=1 seed=0 objective=6\n");
}

TEST_CASE("cli train casgd on a single example") {
  TempDir dir;
  const auto data = dir.file("one.svm", "2 1:1\n");
  const auto model = dir.file("model.txt");
  REQUIRE(run_cli(train_args(data, model, "casgd")).code == 0);
  CHECK(slurp(model) == "sparselin-model v1\nloss squared\ndim 1\nbias 2\n");
}

TEST_CASE("cli rejects bad flags with exit 1") {
  TempDir dir;
  const auto data = dir.file("one.svm", "2 1:1\n");
  const auto model = dir.file("model.txt");

  auto r = run_cli(train_args(data, model, "sgd", "squared", "0"));
  CHECK(r.code == 1);
  CHECK(r.err.find("--lambda") != std::string::npos);

  r = run_cli(train_args(data, model, "sgd", "squared", "1", "0"));
  CHECK(r.code == 1);
  CHECK(r.err.find("--steps") != std::string::npos);

  CHECK(run_cli(train_args(data, model, "adam")).code == 1);
  CHECK(run_cli(train_args(data, model, "sgd", "huber")).code == 1);
  CHECK(run_cli(train_args(data, model, "sgd", "hinge")).code == 1);  // label 2
  CHECK(run_cli(train_args(dir.file("missing.svm"), model, "sgd")).code == 1);
  CHECK(run_cli({"train", "--data", data, "--model", model}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK_FALSE(fs::exists(model));
}

TEST_CASE("cli exit 2 on numerical failure") {
  TempDir dir;
  const auto data = dir.file("big.svm", "1e200 1:1e200\n");
  const auto model = dir.file("model.txt");
  const auto r = run_cli(train_args(data, model, "sgd", "squared", "1e-300", "5"));
  CHECK(r.code == 2);
}

TEST_CASE("cli predict") {
  TempDir dir;
  const auto model = dir.file("model.txt", "sparselin-model v1\nloss squared\ndim 1\nbias 2\n0:2\n");
  const auto input = dir.file("in.svm", "0 1:1\n5\n1:1\n-1 3:4\n");
  auto r = run_cli({"predict", "--model", model, "--data", input});
  REQUIRE(r.code == 0);
  CHECK(r.out == "4\n2\n4\n2\n");

  const auto out = dir.file("preds.txt");
  r = run_cli({"predict", "--model", model, "--data", input, "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == "4\n2\n4\n2\n");

  const auto bad = dir.file("bad.txt", "sparselin-model v9\n");
  CHECK(run_cli({"predict", "--model", bad, "--data", input}).code == 1);
}

TEST_CASE("cli eval") {
  TempDir dir;
  const auto data = dir.file("one.svm", "2 1:1\n");
  const auto zero = dir.file("zero.txt", "sparselin-model v1\nloss squared\ndim 1\nbias 0\n");
  auto r = run_cli({"eval", "--model", zero, "--data", data, "--lambda", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "avg_loss=2 objective=2\n");

  const auto trained =
      dir.file("m.txt", "sparselin-model v1\nloss squared\ndim 1\nbias 2\n0:2\n");
  r = run_cli({"eval", "--model", trained, "--data", data, "--lambda", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "avg_loss=2 objective=6\n");

  const auto cls = dir.file("cls.svm", "1 1:2\n-1 1:-1\n1 1:0.5\n-1 2:1\n");
  const auto sep = dir.file("sep.txt", "sparselin-model v1\nloss hinge\ndim 1\nbias 0\n0:1\n");
  r = run_cli({"eval", "--model", sep, "--data", cls, "--lambda", "1"});
  REQUIRE(r.code == 0);
  // p = 2, -1, 0.5, 0 -> hinge 0, 0, 0.5, 1; the p == 0 tie counts as wrong.
  CHECK(r.out == "avg_loss=0.375 objective=0.875 accuracy=0.75\n");

  CHECK(run_cli({"eval", "--model", sep, "--data", data, "--lambda", "1"}).code == 1);
  CHECK(run_cli({"eval", "--model", sep, "--data", cls, "--lambda", "-1"}).code == 1);
}

TEST_CASE("cli train is byte-for-byte deterministic") {
  TempDir dir;
  std::string text;
  for (int i = 0; i < 50; ++i) {
    text += (i % 2 ? "1" : "-1");
    text += " " + std::to_string(1 + i % 7) + ":" + std::to_string(0.1 * i) + " " +
            std::to_string(9 + i % 5) + ":" + std::to_string(1.0 - 0.03 * i) + "\n";
  }
  const auto data = dir.file("d.svm", text);
  for (const std::string algo : {"sgd", "asgd", "casgd"}) {
    const auto a = dir.file(algo + "_a.txt");
    const auto b = dir.file(algo + "_b.txt");
    auto args = train_args(data, a, algo, "log", "0.01", "5000");
    REQUIRE(run_cli(args).code == 0);
    args.back() = b;
    REQUIRE(run_cli(args).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).size() > 40);
  }
}
