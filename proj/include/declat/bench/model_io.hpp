#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "declat/bench/benchmark.hpp"
#include "declat/bench/dataset.hpp"
#include "declat/decision_lattice.hpp"
#include "declat/scaling.hpp"

namespace declat::bench {

inline constexpr int model_format_version = 1;
inline constexpr int lattice_format_version = 1;

/// A decision lattice together with everything needed to describe new rows.
struct TrainedModel {
  std::string model_name;
  std::string target;
  std::vector<ColumnEncoding> encodings;
  ScalingSchema schema;
  DecisionLattice lattice;

  const std::vector<std::string>& alphabet() const { return schema.literal_names(); }
  /// Literal description of raw feature row r of `table`.
  AttributeSet describe(const RawTable& table, std::size_t r) const;
};

/// Fits scaling on all rows of `data` and trains a DL_DT or DL_RF_m lattice.
TrainedModel train_model(const Dataset& data, const ModelSpec& spec, const BenchConfig& config);

nlohmann::json model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const nlohmann::json& j);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

/// Predicted values for every row of a CSV, encoded with the model's encodings.
std::vector<double> predict_csv(const TrainedModel& model, const CsvTable& rows);

enum class ExportFormat { json, dot };
ExportFormat export_format_from_string(const std::string& s);

/// For each exported rule, the exported rules directly above it (its upper
/// covers: strictly smaller premises with nothing in between).
std::vector<std::vector<std::size_t>> hasse_covers(const DecisionLattice& dl,
                                                   const std::vector<std::size_t>& ids);

/// Rule ids to export: all rules, or only those covering `description`.
std::vector<std::size_t> export_selection(const DecisionLattice& dl,
                                          const std::optional<AttributeSet>& description);

nlohmann::json lattice_to_json(const DecisionLattice& dl, const std::vector<std::string>& alphabet,
                               const std::optional<AttributeSet>& cover = std::nullopt);
std::string lattice_to_dot(const DecisionLattice& dl, const std::vector<std::string>& alphabet,
                           const std::optional<AttributeSet>& cover = std::nullopt);

/// Writes json or dot. Throws std::runtime_error when the path is unwritable.
void export_lattice(const DecisionLattice& dl, const std::vector<std::string>& alphabet,
                    ExportFormat format, const std::filesystem::path& path,
                    const std::optional<AttributeSet>& cover = std::nullopt);

struct ImportedLattice {
  std::vector<std::string> alphabet;
  DecisionLattice lattice;
};

ImportedLattice lattice_from_json(const nlohmann::json& j);
ImportedLattice import_lattice(const std::filesystem::path& path);

}  // namespace declat::bench
