#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparselin/data_io.hpp"
#include "sparselin/solvers.hpp"

namespace py = pybind11;
using namespace sparselin;

namespace {

SparseVec make_sparse(std::size_t dim, const std::vector<std::pair<std::size_t, double>>& pairs) {
  std::vector<SparseEntry> entries;
  entries.reserve(pairs.size());
  for (const auto& [index, value] : pairs) entries.push_back({index, value});
  return SparseVec(dim, std::move(entries));
}

std::vector<std::pair<std::size_t, double>> sparse_entries(const SparseVec& x) {
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& e : x) out.emplace_back(e.index, e.value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_sparselin, m) {
  m.doc() = "Sparse SGD, averaged SGD and centered averaged SGD for linear models";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<EmptyDatasetError>(m, "EmptyDatasetError", error.ptr());
  py::register_exception<LabelError>(m, "LabelError", error.ptr());
  py::register_exception<NonFiniteError>(m, "NonFiniteError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<IndexOrderError>(m, "IndexOrderError", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

  py::enum_<LossKind>(m, "LossKind")
      .value("ABSOLUTE", LossKind::Absolute)
      .value("SQUARED", LossKind::Squared)
      .value("HINGE", LossKind::Hinge)
      .value("LOG", LossKind::Log);

  py::enum_<Algorithm>(m, "Algorithm")
      .value("SGD", Algorithm::Sgd)
      .value("ASGD", Algorithm::Asgd)
      .value("CASGD", Algorithm::Casgd);

  m.def("parse_loss", [](const std::string& name) {
    const auto kind = parse_loss_name(name);
    if (!kind) throw ConfigError("unknown loss '" + name + "'");
    return *kind;
  });
  m.def("parse_algorithm", [](const std::string& name) {
    const auto algo = parse_algorithm_name(name);
    if (!algo) throw ConfigError("unknown algorithm '" + name + "'");
    return *algo;
  });

  py::class_<TouchCounter>(m, "TouchCounter")
      .def(py::init<>())
      .def_readonly("loop_dense_touches", &TouchCounter::loop_dense_touches)
      .def_readonly("outside_dense_touches", &TouchCounter::outside_dense_touches)
      .def_readonly("sparse_touches", &TouchCounter::sparse_touches);

  py::class_<SparseVec>(m, "SparseVec")
      .def(py::init(&make_sparse), py::arg("dim"), py::arg("entries"))
      .def_property_readonly("dim", &SparseVec::dim)
      .def_property_readonly("nnz", &SparseVec::nnz)
      .def_property_readonly("entries", &sparse_entries)
      .def("__len__", &SparseVec::nnz)
      .def("__eq__", [](const SparseVec& a, const SparseVec& b) { return a == b; });

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def("add", &Dataset::add, py::arg("x"), py::arg("y"))
      .def_property_readonly("dim", &Dataset::dim)
      .def("__len__", &Dataset::size)
      .def("__getitem__", [](const Dataset& d, std::size_t i) {
        if (i >= d.size()) throw py::index_error();
        return py::make_tuple(d[i].x, d[i].y);
      });

  py::class_<LinearModel>(m, "LinearModel")
      .def(py::init([](std::vector<double> w, double b, LossKind loss) {
             return LinearModel{DenseVec(std::move(w)), b, loss};
           }),
           py::arg("w"), py::arg("b"), py::arg("loss"))
      .def_property_readonly("w", [](const LinearModel& model) { return model.w.to_vector(); })
      .def_readonly("b", &LinearModel::b)
      .def_readonly("loss", &LinearModel::loss)
      .def_property_readonly("dim", &LinearModel::dim)
      .def("predict", [](const LinearModel& model, const SparseVec& x) { return predict(model, x); })
      .def("__eq__", [](const LinearModel& a, const LinearModel& b) { return a == b; });

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init([](std::uint64_t steps, double lambda, std::uint64_t seed, LossKind loss) {
             TrainConfig cfg{steps, lambda, seed, loss};
             cfg.validate();
             return cfg;
           }),
           py::arg("steps"), py::arg("lam"), py::arg("seed"), py::arg("loss"))
      .def_readonly("steps", &TrainConfig::steps)
      .def_readonly("lam", &TrainConfig::lambda)
      .def_readonly("seed", &TrainConfig::seed)
      .def_readonly("loss", &TrainConfig::loss);

  m.def("train",
        [](Algorithm algo, const Dataset& data, const TrainConfig& cfg, TouchCounter* counter) {
          py::gil_scoped_release release;
          return train(algo, data, cfg, counter);
        },
        py::arg("algo"), py::arg("data"), py::arg("config"), py::arg("counter") = nullptr);
  m.def("sgd_train", [](const Dataset& d, const TrainConfig& c) { return sgd_train(d, c); });
  m.def("asgd_train", [](const Dataset& d, const TrainConfig& c) { return asgd_train(d, c); });
  m.def("casgd_train", [](const Dataset& d, const TrainConfig& c) { return casgd_train(d, c); });

  m.def("predict", [](const LinearModel& model, const SparseVec& x) { return predict(model, x); });
  m.def("objective_value", &objective_value, py::arg("model"), py::arg("data"), py::arg("lam"));
  m.def("loss_value", &loss_value, py::arg("kind"), py::arg("p"), py::arg("y"));
  m.def("loss_subgradient", &loss_subgradient, py::arg("kind"), py::arg("p"), py::arg("y"));
  m.def("draw_indices", &draw_indices, py::arg("seed"), py::arg("steps"), py::arg("m"));
  m.def("mean_vector", [](const Dataset& data) { return mean_vector(data).to_vector(); });

  m.def("parse_libsvm",
        [](const std::string& text, std::optional<std::size_t> dim) {
          return parse_libsvm(std::string_view(text), dim);
        },
        py::arg("text"), py::arg("dim") = py::none());
  m.def("load_libsvm",
        [](const std::filesystem::path& path, std::optional<std::size_t> dim) {
          return load_libsvm(path, dim);
        },
        py::arg("path"), py::arg("dim") = py::none());
  m.def("model_to_string", &model_to_string);
  m.def("model_from_string", [](const std::string& text) { return model_from_string(text); });
  m.def("save_model", &save_model, py::arg("model"), py::arg("path"));
  m.def("load_model", &load_model, py::arg("path"));
}
