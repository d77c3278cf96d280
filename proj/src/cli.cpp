// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Three subcommands:
//   run     train one model on one dataset and persist a run directory
//   plot    render a metrics CSV as an SVG
//   compare summarize two completed runs against each other

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnnbench/errors.hpp"
#include "qnnbench/harness.hpp"

namespace qnnbench {

namespace {

using json = nlohmann::json;

const char kUsage[] =
    "usage: qnnbench <command> [options]\n"
    "\n"
    "commands:\n"
    "  run      --dataset <csv> --out <dir> [--model qnn|nn] [--epochs N]\n"
    "           [--lr X] [--seed S] [--hidden 10,6] [--stats-scope whole|train]\n"
    "           [--train-fraction F] [--delimiter C] [--label-column I]\n"
    "           [--class-order a,b,...] [--nn-activation sigmoid|tanh]\n"
    "           [--nn-loss cross_entropy|squared_error] [--config file.json]\n"
    "  plot     --metrics <csv> --out <svg>\n"
    "  compare  --a <run dir> --b <run dir> [--csv <path>]\n"
    "\n"
    "exit codes: 0 ok, 1 usage error, 2 data error, 3 runtime error\n";

std::map<std::string, std::string> parse_flags(
    const std::vector<std::string>& args, std::size_t start) {
  std::map<std::string, std::string> flags;
  for (std::size_t i = start; i < args.size(); i += 2) {
    const std::string& key = args[i];
    if (key.size() < 3 || key.substr(0, 2) != "--") {
      throw UsageError("expected a --flag, got '" + key + "'");
    }
    if (i + 1 >= args.size()) {
      throw UsageError("flag " + key + " needs a value");
    }
    std::string name = key.substr(2);
    if (flags.count(name)) throw UsageError("duplicate flag --" + name);
    flags[name] = args[i + 1];
  }
  return flags;
}

long long parse_int(const std::string& v, const std::string& flag) {
  long long out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw UsageError("--" + flag + ": not an integer: '" + v + "'");
  }
  return out;
}

double parse_real(const std::string& v, const std::string& flag) {
  double out = 0.0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw UsageError("--" + flag + ": not a number: '" + v + "'");
  }
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_widths(const std::string& v,
                                      const std::string& flag) {
  std::vector<std::size_t> widths;
  for (const std::string& item : split_list(v)) {
    long long w = parse_int(item, flag);
    if (w < 1) throw UsageError("--" + flag + ": widths must be >= 1");
    widths.push_back(static_cast<std::size_t>(w));
  }
  if (widths.empty()) throw UsageError("--" + flag + ": empty width list");
  return widths;
}

// Applies one config key; shared by the JSON file and the CLI flags so both
// speak the same schema.
void apply_option(ExperimentConfig& config, const std::string& key,
                  const json& value) {
  auto as_string = [&]() -> std::string {
    if (!value.is_string()) {
      throw UsageError("option '" + key + "' expects a string");
    }
    return value.get<std::string>();
  };
  if (key == "dataset") {
    config.dataset_path = as_string();
  } else if (key == "out") {
    config.out_dir = as_string();
  } else if (key == "model") {
    config.model = as_string();
  } else if (key == "epochs") {
    if (value.is_number_integer()) {
      config.epochs = value.get<int>();
    } else {
      config.epochs = static_cast<int>(parse_int(as_string(), key));
    }
  } else if (key == "lr") {
    config.lr = value.is_number() ? value.get<double>()
                                  : parse_real(as_string(), key);
  } else if (key == "seed") {
    if (value.is_number_integer()) {
      config.seed = value.get<std::uint64_t>();
    } else {
      long long s = parse_int(as_string(), key);
      if (s < 0) throw UsageError("--seed: must be nonnegative");
      config.seed = static_cast<std::uint64_t>(s);
    }
  } else if (key == "hidden") {
    if (value.is_array()) {
      config.hidden.clear();
      for (const auto& w : value) {
        if (!w.is_number_integer() || w.get<long long>() < 1) {
          throw UsageError("option 'hidden' expects positive integers");
        }
        config.hidden.push_back(w.get<std::size_t>());
      }
      if (config.hidden.empty()) throw UsageError("'hidden' is empty");
    } else {
      config.hidden = parse_widths(as_string(), key);
    }
  } else if (key == "stats-scope") {
    config.stats_scope = as_string();
  } else if (key == "train-fraction") {
    config.train_fraction = value.is_number() ? value.get<double>()
                                              : parse_real(as_string(), key);
  } else if (key == "delimiter") {
    std::string d = as_string();
    if (d.size() != 1) throw UsageError("--delimiter: one character expected");
    config.load.delimiter = d[0];
  } else if (key == "label-column") {
    if (value.is_number_integer()) {
      config.load.label_column = value.get<int>();
    } else {
      config.load.label_column =
          static_cast<int>(parse_int(as_string(), key));
    }
  } else if (key == "class-order") {
    if (value.is_array()) {
      config.load.class_order.clear();
      for (const auto& c : value) {
        if (!c.is_string()) {
          throw UsageError("option 'class-order' expects strings");
        }
        config.load.class_order.push_back(c.get<std::string>());
      }
    } else {
      config.load.class_order = split_list(as_string());
    }
  } else if (key == "nn-activation") {
    config.nn_activation = as_string();
  } else if (key == "nn-loss") {
    config.nn_loss = as_string();
  } else {
    throw UsageError("unknown option '" + key + "'");
  }
}

ExperimentConfig build_run_config(
    const std::map<std::string, std::string>& flags) {
  ExperimentConfig config;
  // File first, flags second: the command line wins on conflicts.
  auto cfg = flags.find("config");
  if (cfg != flags.end()) {
    std::ifstream in(cfg->second);
    if (!in) throw UsageError("cannot open config file: " + cfg->second);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw UsageError("config file " + cfg->second + ": " + e.what());
    }
    if (!j.is_object()) {
      throw UsageError("config file must hold a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
      apply_option(config, key, value);
    }
  }
  for (const auto& [key, value] : flags) {
    if (key == "config") continue;
    apply_option(config, key, json(value));
  }
  return config;
}

int cmd_run(const std::vector<std::string>& args) {
  ExperimentConfig config = build_run_config(parse_flags(args, 1));
  RunResult result = run_experiment(config);
  std::cout << "run complete: " << result.run_dir << "\n"
            << "  final train accuracy: "
            << format_double(result.final_train_accuracy) << "\n"
            << "  final test accuracy:  "
            << format_double(result.final_test_accuracy) << "\n"
            << "  wall seconds:         "
            << format_double(result.wall_seconds) << "\n";
  return kExitOk;
}

int cmd_plot(const std::vector<std::string>& args) {
  auto flags = parse_flags(args, 1);
  auto metrics = flags.find("metrics");
  auto out = flags.find("out");
  if (metrics == flags.end() || out == flags.end()) {
    throw UsageError("plot needs --metrics and --out");
  }
  for (const auto& [key, value] : flags) {
    (void)value;
    if (key != "metrics" && key != "out") {
      throw UsageError("unknown option '" + key + "'");
    }
  }
  emit_plot(metrics->second, out->second);
  std::cout << "wrote " << out->second << "\n";
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& args) {
  auto flags = parse_flags(args, 1);
  auto a = flags.find("a");
  auto b = flags.find("b");
  if (a == flags.end() || b == flags.end()) {
    throw UsageError("compare needs --a and --b");
  }
  for (const auto& [key, value] : flags) {
    (void)value;
    if (key != "a" && key != "b" && key != "csv") {
      throw UsageError("unknown option '" + key + "'");
    }
  }
  Comparison cmp = compare_runs(a->second, b->second);
  std::cout << comparison_text(cmp);
  auto csv = flags.find("csv");
  if (csv != flags.end()) {
    std::ofstream out(csv->second, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + csv->second);
    out << comparison_csv(cmp);
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      std::cout << kUsage;
      return args.empty() ? kExitUsage : kExitOk;
    }
    if (args[0] == "run") return cmd_run(args);
    if (args[0] == "plot") return cmd_plot(args);
    if (args[0] == "compare") return cmd_compare(args);
    throw UsageError("unknown command '" + args[0] + "'");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << kUsage;
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace qnnbench
