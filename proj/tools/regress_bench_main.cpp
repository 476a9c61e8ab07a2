// regress-bench: command-line driver for the insurance-charges regression
// benchmark. Exit codes: 0 success, 1 usage, 2 input/data error,
// 3 computation error.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regress_bench/dataset.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/pipeline.hpp"
#include "regress_bench/serialization.hpp"

namespace fs = std::filesystem;
using namespace regress_bench;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<std::string> input;
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k;
  std::optional<double> threshold;
  std::optional<double> ratio;
  std::optional<std::string> model;
  std::optional<std::string> out;
  std::optional<std::string> cv_scope;
  bool svg = false;
};

void log(const std::string& msg) { std::cerr << "regress-bench: " << msg << '\n'; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return kExitUsage;
    case ErrorKind::Io:
    case ErrorKind::MissingHeader:
    case ErrorKind::RowArity:
    case ErrorKind::ParseError:
    case ErrorKind::SchemaMismatch:
    case ErrorKind::VersionMismatch:
    case ErrorKind::UnknownColumn:
    case ErrorKind::TypeMismatch: return kExitInput;
    default: return kExitCompute;
  }
}

// Precedence: flag > config file > REGRESS_BENCH_SEED > built-in default.
PipelineConfig resolve_config(const Flags& f) {
  PipelineConfig c;
  if (const char* env = std::getenv("REGRESS_BENCH_SEED")) {
    std::uint64_t seed = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
      throw UsageError("REGRESS_BENCH_SEED is not an unsigned integer: '" + std::string(text) + "'");
    c.seed = seed;
  }
  if (f.config) {
    try {
      c = load_config(*f.config, c);
    } catch (const Error& e) {
      // A config file that cannot be read or parsed is bad input.
      throw Error(e.kind() == ErrorKind::Config ? ErrorKind::ParseError : e.kind(), e.detail());
    }
  }
  if (f.input) c.input_path = *f.input;
  if (f.seed) c.seed = *f.seed;
  if (f.k) c.k = *f.k;
  if (f.threshold) c.outlier_threshold = *f.threshold;
  if (f.ratio) c.split_ratio = *f.ratio;
  if (f.out) c.output_dir = *f.out;
  if (f.cv_scope) {
    auto s = parse_cv_scope(*f.cv_scope);
    if (!s) throw UsageError("--cv-scope must be filtered_full or train_only");
    c.cv_scope = *s;
  }
  try {
    validate(c);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return c;
}

Dataset load_input(const PipelineConfig& c) {
  if (c.input_path.empty()) throw UsageError("--input is required");
  return read_csv_file(c.input_path);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory '" + dir + "'");
}

template <typename Fn>
auto computing(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    // Any failure while fitting or scoring is a computation error.
    throw ComputeError(e.what());
  }
}

int cmd_eda(const Flags& f) {
  const auto c = resolve_config(f);
  const auto raw = load_input(c);
  const auto eda = run_eda(raw, c.outlier_threshold);

  ensure_dir(c.output_dir);
  write_file_atomic(fs::path(c.output_dir) / "eda.json", to_json(eda).dump(2) + "\n");
  if (f.svg) {
    auto emit = [&](const std::string& stage, const auto& groups) {
      for (const auto& [name, summaries] : groups)
        write_file_atomic(fs::path(c.output_dir) / ("eda_" + stage + "_" + name + ".svg"),
                          render_box_svg("charges by " + name + " (" + stage + ")", summaries));
    };
    emit("pre_filter", eda.pre_filter);
    emit("post_filter", eda.post_filter);
  }
  std::cout << "rows: " << eda.raw_rows << " raw, " << eda.filtered_rows << " with charges <= "
            << format_double(eda.threshold) << '\n';
  std::cout << "charges by smoker: median(yes) = " << format_double(eda.smoker_yes.median) << ", box(no) = ["
            << format_double(eda.smoker_no.q1) << ", " << format_double(eda.smoker_no.q3) << "]\n";
  std::cout << "median separation (smoker yes vs no): " << (eda.smoker_separated ? "true" : "false") << '\n';
  return 0;
}

int cmd_run(const Flags& f) {
  const auto c = resolve_config(f);
  const auto raw = load_input(c);
  const auto report = computing([&] { return run_experiment(raw, c); });

  if (c.outlier_threshold == kDefaultOutlierThreshold && report.counts.filtered != kReferenceFilteredRows)
    log("filtered row count " + std::to_string(report.counts.filtered) + " differs from the reference count " +
        std::to_string(kReferenceFilteredRows));
  for (const auto& m : report.models)
    if (m.svr_fit && !m.svr_fit->converged)
      log("warning: SVR optimizer stopped at max_iters=" + std::to_string(c.svr.max_iters) +
          " before meeting tol; best iterate kept");

  const auto json = report_to_json(report);
  const auto tables = render_tables(report);
  ensure_dir(c.output_dir);
  write_file_atomic(fs::path(c.output_dir) / "report.json", json.dump(2) + "\n");
  write_file_atomic(fs::path(c.output_dir) / "report.txt", tables);
  write_file_atomic(fs::path(c.output_dir) / "scatter.json", scatter_points(json).dump(2) + "\n");
  std::cout << tables;
  return 0;
}

int cmd_train(const Flags& f) {
  if (!f.model) throw UsageError("train requires --model KIND (gradient_boosting, linear_regression, svr)");
  const auto kind = parse_model_kind(*f.model);
  if (!kind) throw UsageError("unknown model kind '" + *f.model + "'");
  const auto c = resolve_config(f);
  const auto raw = load_input(c);
  const auto model = computing([&] { return train_model(raw, c, *kind); });

  ensure_dir(c.output_dir);
  const auto path = fs::path(c.output_dir) / ("model_" + std::string(to_string(*kind)) + ".json");
  save_model(model, path);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

int cmd_predict(const Flags& f) {
  if (!f.model) throw UsageError("predict requires --model FILE");
  if (!f.input) throw UsageError("predict requires --input RECORDS.csv");
  const std::string out_dir = f.out.value_or("out");
  const auto model = load_model(*f.model);

  std::ifstream in(*f.input, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + *f.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  Dataset records(false);
  if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      records = parse_csv_text(text, CsvOptions{false});
    } catch (const Error& e) {
      // Also accept full records that still carry a charges column.
      if (e.kind() != ErrorKind::MissingHeader) throw;
      records = parse_csv_text(text, CsvOptions{true});
    }
  }
  const auto x = encode(records).x;
  const auto pred = x.rows() == 0 ? Vector{} : computing([&] { return model.predict(x); });

  std::ostringstream os;
  os << "predicted_charges\n";
  for (double v : pred) os << format_double(v) << '\n';
  ensure_dir(out_dir);
  const auto path = fs::path(out_dir) / "predictions.csv";
  write_file_atomic(path, os.str());
  std::cout << "wrote " << pred.size() << " predictions to " << path.string() << '\n';
  return 0;
}

int cmd_scatter(const Flags& f) {
  if (!f.input) throw UsageError("scatter requires --input REPORT.json");
  std::ifstream in(*f.input);
  if (!in) fail(ErrorKind::Io, "cannot open '" + *f.input + "'");
  Json report;
  try {
    report = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
  Json points;
  try {
    points = scatter_points(report);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaMismatch, std::string("report lacks per-fold scores: ") + e.what());
  }
  const std::string out_dir = f.out.value_or("out");
  ensure_dir(out_dir);
  write_file_atomic(fs::path(out_dir) / "scatter.json", points.dump(2) + "\n");
  std::cout << "wrote " << points.at("points").size() << " points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regression benchmark for medical insurance charges", "regress-bench"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "Input CSV (report JSON for scatter)");
    sub->add_option("--config", flags.config, "Flat key = value config file");
    sub->add_option("--seed", flags.seed, "Shuffle seed for split and folds");
    sub->add_option("--k", flags.k, "Number of cross-validation folds");
    sub->add_option("--threshold", flags.threshold, "Drop rows with charges above this value");
    sub->add_option("--ratio", flags.ratio, "Training fraction of the split");
    sub->add_option("--model", flags.model, "Model kind (train) or model file (predict)");
    sub->add_option("--out", flags.out, "Output directory");
    sub->add_option("--cv-scope", flags.cv_scope, "filtered_full or train_only");
  };

  auto* eda = app.add_subcommand("eda", "Grouped box-plot summaries and the smoker separation check");
  add_common(eda);
  eda->add_flag("--svg", flags.svg, "Also write SVG box plots");
  auto* run = app.add_subcommand("run", "Full experiment: test metrics and k-fold CV for all models");
  add_common(run);
  auto* train = app.add_subcommand("train", "Fit one model on the training split and save it");
  add_common(train);
  auto* predict = app.add_subcommand("predict", "Predict charges for a records CSV with a saved model");
  add_common(predict);
  auto* scatter = app.add_subcommand("scatter", "Per-fold (r2, rmse) points from a report");
  add_common(scatter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eda) return cmd_eda(flags);
    if (*run) return cmd_run(flags);
    if (*train) return cmd_train(flags);
    if (*predict) return cmd_predict(flags);
    return cmd_scatter(flags);
  } catch (const UsageError& e) {
    log(e.what());
    return kExitUsage;
  } catch (const ComputeError& e) {
    log(e.what());
    return kExitCompute;
  } catch (const Error& e) {
    log(e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    log(e.what());
    return kExitCompute;
  }
}
