// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations: encoding, the sine-product
// network, the state-vector oracle, and the experiment harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnnbench/data.hpp"
#include "qnnbench/encoding.hpp"
#include "qnnbench/errors.hpp"
#include "qnnbench/harness.hpp"
#include "qnnbench/mlp.hpp"
#include "qnnbench/qnn.hpp"
#include "qnnbench/statevec.hpp"

namespace py = pybind11;

namespace {

qnnbench::Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw qnnbench::DataError("empty matrix");
  qnnbench::Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols) {
      throw qnnbench::DataError("ragged matrix at row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<double>> from_matrix(const qnnbench::Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) rows[r] = m.row_vec(r);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sine-product quantum neural network simulator and benchmark";

  py::register_exception<qnnbench::UsageError>(m, "UsageError");
  py::register_exception<qnnbench::DataError>(m, "DataError");

  // encoding
  m.def("encode_feature", &qnnbench::encode_feature, py::arg("x"),
        py::arg("min"), py::arg("max"),
        "Min-max angle map into [0, 2*pi].");
  m.def(
      "compute_stats",
      [](const std::vector<std::vector<double>>& rows) {
        auto stats = qnnbench::compute_stats(to_matrix(rows));
        return py::make_tuple(stats.mins, stats.maxs);
      },
      py::arg("rows"), "Column-wise (mins, maxs) over all rows.");
  m.def(
      "encode_sample",
      [](const std::vector<double>& raw, const std::vector<double>& mins,
         const std::vector<double>& maxs) {
        return qnnbench::encode_sample(raw, {mins, maxs});
      },
      py::arg("raw"), py::arg("mins"), py::arg("maxs"));
  m.def(
      "amplitudes",
      [](double theta) {
        auto a = qnnbench::amplitudes(theta);
        return py::make_tuple(a.a0, a.a1);
      },
      py::arg("theta"), "(cos(theta), sin(theta)) amplitude pair.");

  // sine-product network
  m.def("neuron_forward", &qnnbench::neuron_forward, py::arg("input_angles"),
        py::arg("weights"), "Product of sin(input + weight) factors.");
  m.def("angle_of", &qnnbench::angle_of, py::arg("h"),
        "Principal arcsin of the clamped amplitude.");
  m.def("qnn_loss", &qnnbench::qnn_loss, py::arg("y"), py::arg("target"),
        "Sum of (y_i^2 - t_i)^2.");
  m.def("predict_bits", &qnnbench::predict_bits, py::arg("y"));
  m.def("decode_class", &qnnbench::decode_class, py::arg("y"),
        py::arg("class_count"));
  m.def("label_to_code", &qnnbench::label_to_code, py::arg("class_index"),
        py::arg("class_count"));
  m.def("output_qubit_count", &qnnbench::output_qubit_count,
        py::arg("class_count"));

  // state-vector oracle
  m.def("neuron_oracle", &qnnbench::neuron_oracle, py::arg("input_angles"),
        py::arg("weights"),
        "Target-qubit |1> probability of the neuron circuit.");
  m.def(
      "product_state_probabilities",
      [](const std::vector<double>& angles) {
        auto state = qnnbench::init_product_state(angles, false);
        std::vector<double> probs(state.amps.size());
        for (std::size_t i = 0; i < probs.size(); ++i) {
          probs[i] = std::norm(state.amps[i]);
        }
        return probs;
      },
      py::arg("angles"),
      "Basis-state probabilities of the encoded product state.");

  // datasets
  m.def(
      "load_csv",
      [](const std::string& path, char delimiter, int label_column,
         const std::vector<std::string>& class_order) {
        qnnbench::LoadOptions opts;
        opts.delimiter = delimiter;
        opts.label_column = label_column;
        opts.class_order = class_order;
        qnnbench::LoadReport report;
        qnnbench::Dataset ds = qnnbench::load_csv(path, opts, &report);
        py::dict out;
        out["features"] = from_matrix(ds.features);
        out["labels"] = ds.labels;
        out["class_count"] = ds.class_count;
        out["class_names"] = ds.class_names;
        out["feature_names"] = ds.feature_names;
        out["dropped_rows"] = report.dropped_rows;
        return out;
      },
      py::arg("path"), py::arg("delimiter") = ',',
      py::arg("label_column") = -1,
      py::arg("class_order") = std::vector<std::string>{});

  // harness
  m.def(
      "run_experiment",
      [](const std::string& dataset, const std::string& out_dir,
         const std::string& model, int epochs, double lr, std::uint64_t seed,
         const std::vector<std::size_t>& hidden,
         const std::string& stats_scope) {
        qnnbench::ExperimentConfig config;
        config.dataset_path = dataset;
        config.out_dir = out_dir;
        config.model = model;
        config.epochs = epochs;
        config.lr = lr;
        config.seed = seed;
        config.hidden = hidden;
        config.stats_scope = stats_scope;
        qnnbench::RunResult res = qnnbench::run_experiment(config);
        py::dict out;
        out["run_dir"] = res.run_dir;
        out["final_train_accuracy"] = res.final_train_accuracy;
        out["final_test_accuracy"] = res.final_test_accuracy;
        out["wall_seconds"] = res.wall_seconds;
        return out;
      },
      py::arg("dataset"), py::arg("out_dir"), py::arg("model") = "qnn",
      py::arg("epochs") = 1000, py::arg("lr") = 0.5, py::arg("seed") = 1,
      py::arg("hidden") = std::vector<std::size_t>{10, 6},
      py::arg("stats_scope") = "whole");
  m.def("emit_plot", &qnnbench::emit_plot, py::arg("metrics_csv"),
        py::arg("out_svg"));
  m.def(
      "compare_runs",
      [](const std::string& a, const std::string& b) {
        qnnbench::Comparison cmp = qnnbench::compare_runs(a, b);
        auto as_dict = [](const qnnbench::RunSummary& s) {
          py::dict d;
          d["dir"] = s.dir;
          d["final_train_accuracy"] = s.final_train_accuracy;
          d["final_test_accuracy"] = s.final_test_accuracy;
          d["peak_test_accuracy"] = s.peak_test_accuracy;
          d["gap"] = s.gap;
          return d;
        };
        py::dict out;
        out["a"] = as_dict(cmp.a);
        out["b"] = as_dict(cmp.b);
        out["smaller_gap"] = std::string(1, cmp.smaller_gap);
        return out;
      },
      py::arg("a"), py::arg("b"));
  m.def("cli_main", &qnnbench::cli_main, py::arg("args"),
        "Drive the command line interface; returns the exit code.");
}
