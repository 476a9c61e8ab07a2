// Python surface of the regression benchmark core. Results that are JSON
// documents on the C++ side come back as JSON text; the package wrapper
// decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regress_bench/cross_validation.hpp"
#include "regress_bench/dataset.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/metrics.hpp"
#include "regress_bench/pipeline.hpp"
#include "regress_bench/preprocess.hpp"
#include "regress_bench/serialization.hpp"

namespace py = pybind11;
using namespace regress_bench;

namespace {

Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged feature rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<double>> to_rows(const Matrix& m) {
  std::vector<std::vector<double>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r].assign(m.row(r).begin(), m.row(r).end());
  return out;
}

ModelKind kind_from(const std::string& name) {
  auto k = parse_model_kind(name);
  if (!k) throw py::value_error("unknown model kind '" + name + "'");
  return *k;
}

PipelineConfig config_from(const std::string& text, std::uint64_t seed) {
  PipelineConfig base;
  base.seed = seed;
  auto c = parse_config(text, base);
  validate(c);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regression benchmark core: ingest, EDA, preprocessing, models and evaluation.";

  auto error = py::register_exception<Error>(m, "RegressBenchError", PyExc_ValueError);
  (void)error;

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("n_rows", &Dataset::n_rows)
      .def_property_readonly("has_target", &Dataset::has_target)
      .def("numeric", &Dataset::numeric, py::arg("column"))
      .def("labels", &Dataset::labels, py::arg("column"))
      .def("__len__", &Dataset::n_rows);

  m.def("read_csv", [](const std::string& path, bool require_target) {
    return read_csv_file(path, CsvOptions{require_target});
  }, py::arg("path"), py::arg("require_target") = true);
  m.def("parse_csv", [](const std::string& text, bool require_target) {
    return parse_csv_text(text, CsvOptions{require_target});
  }, py::arg("text"), py::arg("require_target") = true);
  m.def("filter_threshold", &filter_threshold, py::arg("dataset"), py::arg("column"), py::arg("max_value"));

  m.def("encode", [](const Dataset& d) {
    auto e = encode(d);
    return py::make_tuple(to_rows(e.x), e.y, std::vector<std::string>(e.feature_names.begin(), e.feature_names.end()));
  }, py::arg("dataset"), "Returns (rows, targets, feature_names).");

  m.def("split_indices", [](std::size_t n, double ratio, std::uint64_t seed) {
    EncodedMatrix e{Matrix(n, 1), Vector(n, 0.0), {}};
    auto s = split(e, ratio, seed);
    return py::make_tuple(s.train_rows, s.test_rows);
  }, py::arg("n"), py::arg("ratio") = kDefaultSplitRatio, py::arg("seed") = kDefaultSeed);
  m.def("kfold_indices", &kfold_indices, py::arg("n"), py::arg("k"), py::arg("seed"));

  m.def("r_squared", [](const Vector& o, const Vector& p) { return r_squared(o, p); });
  m.def("rmse", [](const Vector& o, const Vector& p) { return rmse(o, p); });
  m.def("mse", [](const Vector& o, const Vector& p) { return mse(o, p); });

  py::class_<FittedModel>(m, "FittedModel")
      .def_property_readonly("kind", [](const FittedModel& f) { return std::string(to_string(f.kind)); })
      .def("predict", [](const FittedModel& f, const std::vector<std::vector<double>>& x) {
        return f.predict(to_matrix(x));
      })
      .def("to_json", [](const FittedModel& f) { return model_to_json(f).dump(); })
      .def("save", [](const FittedModel& f, const std::string& path) { save_model(f, path); });

  m.def("fit", [](const std::string& kind, const std::vector<std::vector<double>>& x, const Vector& y) {
    return fit_model(ModelSpec{kind_from(kind)}, to_matrix(x), y);
  }, py::arg("kind"), py::arg("x"), py::arg("y"), "Fit with default hyperparameters on raw encoded features.");
  m.def("load_model", [](const std::string& path) { return load_model(path); }, py::arg("path"));
  m.def("model_from_json", [](const std::string& text) { return model_from_json(Json::parse(text)); });

  m.def("run_experiment", [](const Dataset& d, const std::string& config, std::uint64_t seed) {
    return report_to_json(run_experiment(d, config_from(config, seed))).dump();
  }, py::arg("dataset"), py::arg("config") = "", py::arg("seed") = kDefaultSeed,
     "Full evaluation; returns the report as JSON text. `config` uses the key = value format.");
  m.def("run_eda", [](const Dataset& d, double threshold) { return to_json(run_eda(d, threshold)).dump(); },
        py::arg("dataset"), py::arg("threshold") = kDefaultOutlierThreshold);
}
