#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "declat/scaling.hpp"
#include "declat/tree.hpp"

namespace declat::bench {

/// Header plus string cells, as read from a CSV file.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180-style reader: comma separated, double-quoted fields may contain
/// commas, quotes ("") and newlines. Throws std::runtime_error on ragged rows
/// or an unterminated quote.
CsvTable parse_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

enum class SourceKind { numeric, binary, categorical };

const char* to_string(SourceKind kind);
SourceKind source_kind_from_string(const std::string& s);

/// How one CSV column turns into feature columns. Categorical columns expand
/// into one 0/1 column per category, named "column=category".
struct ColumnEncoding {
  std::string name;
  SourceKind kind = SourceKind::numeric;
  std::vector<std::string> categories;  // categorical only, in first-seen order

  std::vector<std::string> feature_names() const;
};

struct DatasetSpec {
  std::filesystem::path path;
  std::string target;
  /// Inferred from the target values (all 0/1 -> classification) when empty.
  std::optional<Task> task;
  /// Overrides for the inferred per-column kinds.
  std::map<std::string, SourceKind> column_kinds;
  /// Column holding object names; excluded from the features.
  std::optional<std::string> id_column;
  std::optional<std::size_t> row_cap;
  /// Drop rows with a missing cell ("", "?", "NA") instead of failing.
  bool drop_missing = false;
};

struct Dataset {
  RawTable features;
  std::vector<double> targets;
  Task task = Task::classification;
  std::vector<ColumnEncoding> encodings;
  std::string target_name;

  std::size_t size() const { return targets.size(); }
};

/// Reads and encodes a dataset. A column whose kind is not given is numeric
/// when its first present value parses as a number (binary if all values are 0/1)
/// and categorical otherwise. Errors name the offending row and column.
Dataset load_csv(const DatasetSpec& spec);
Dataset load_dataset(const CsvTable& csv, const DatasetSpec& spec);

/// Encodes rows with a known encoding (e.g. from a saved model). Unknown
/// categories map to all-zero indicator columns. Extra CSV columns are
/// ignored; a missing encoded column is an error.
RawTable encode_rows(const CsvTable& csv, const std::vector<ColumnEncoding>& encodings);

bool is_missing_cell(const std::string& cell);
std::optional<double> parse_number(const std::string& cell);

}  // namespace declat::bench
