#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "declat/bench/dataset.hpp"
#include "declat/forest.hpp"
#include "declat/scaling.hpp"

namespace declat::bench {

enum class ModelKind {
  decision_tree,     // DT
  dl_tree,           // DL_DT: lattice of a single tree
  random_forest,     // RF_m
  dl_forest,         // DL_RF_m
};

struct ModelSpec {
  ModelKind kind = ModelKind::dl_forest;
  std::size_t trees = 1;

  std::string name() const;
  bool is_lattice() const { return kind == ModelKind::dl_tree || kind == ModelKind::dl_forest; }
  /// Parses "DT", "DL_DT", "RF_<m>", "DL_RF_<m>".
  static ModelSpec parse(const std::string& text);
};

std::vector<ModelSpec> parse_model_list(const std::string& comma_separated);

struct BenchConfig {
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  std::vector<ModelSpec> models;
  ScalingOptions scaling;
  TreeConfig tree;     // used by DT and DL_DT
  ForestConfig forest; // tree_count and seed are set per model and fold
  double threshold = 0.5;
};

struct ModelReport {
  std::string name;
  std::vector<double> train;  // metric per fold
  std::vector<double> test;
  std::vector<std::size_t> size;  // rules (lattices) or nodes (trees) per fold
  std::vector<double> construct_seconds;
  std::vector<double> predict_seconds;

  double train_mean() const;
  double test_mean() const;
};

struct BenchReport {
  std::string dataset;
  Task task = Task::classification;
  std::size_t objects = 0;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  std::vector<ModelReport> models;

  /// "f1" for classification, "wape" for regression.
  std::string metric() const;
  /// Best mean over models: max F1 / min WAPE.
  double best_train() const;
  double best_test() const;
  const ModelReport& model(const std::string& name) const;
};

/// Cross-validates every configured model. Scaling thresholds are fitted on
/// the training split of each fold only. RF_m and DL_RF_m of one fold share
/// the same forest.
BenchReport run_benchmark(const Dataset& data, const std::string& dataset_name,
                          const BenchConfig& config);

/// Timings are left out unless asked for, so reports of equal seeds are
/// byte-identical.
nlohmann::json report_to_json(const BenchReport& report, bool with_timings = false);

/// Models by rows, train/test means and best-model deltas as columns.
std::string report_table(const BenchReport& report);

struct TimingPoint {
  std::size_t objects = 0;
  std::size_t trees = 0;
  double forest_seconds = 0.0;
  double lattice_seconds = 0.0;
  std::size_t concepts = 0;

  double total_seconds() const { return forest_seconds + lattice_seconds; }
};

struct TimingConfig {
  std::vector<std::size_t> sizes{1000, 2000, 4000};
  std::size_t trees = 5;
  std::size_t attributes = 20;
  std::size_t repeats = 3;  // the fastest repeat is kept
  std::uint64_t seed = 0;
};

/// Lattice construction time (forest + closure) on planted synthetic data.
std::vector<TimingPoint> run_timing(const TimingConfig& config);
nlohmann::json timing_to_json(const std::vector<TimingPoint>& points);

/// splitmix64 of a seed combined with two indices.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace declat::bench
