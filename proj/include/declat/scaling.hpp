#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "declat/context.hpp"

namespace declat {

/// Column-major numeric table. Binary columns hold 0/1 values.
struct RawTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;
  /// Optional object names; when empty, rows are named by their index.
  std::vector<std::string> row_names;

  std::size_t row_count() const { return columns.empty() ? row_names.size() : columns.front().size(); }
  std::size_t column_count() const { return columns.size(); }
  std::vector<double> row(std::size_t r) const;
  /// Table with the given rows, in the given order.
  RawTable select_rows(std::span<const std::size_t> rows) const;
};

enum class ColumnKind {
  dichotomic,  // 0/1 column -> literals "c" and "not c"
  numeric,     // thresholds t_j -> literals "c<=t_j" and "c>t_j"
};

const char* to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& s);

struct ColumnScaling {
  std::string name;
  ColumnKind kind = ColumnKind::numeric;
  std::vector<double> thresholds;  // numeric only, strictly increasing
};

/// Where a literal comes from: its source column and predicate.
struct LiteralSource {
  std::size_t column;
  bool positive;          // "c" / "c<=t" when true; "not c" / "c>t" otherwise
  double threshold = 0.;  // numeric only
};

/// Maps source columns onto a literal alphabet of complementary pairs.
///
/// Literals are laid out column by column; within a dichotomic column the
/// pair is ("c", "not c"), within a numeric column one pair ("c<=t", "c>t")
/// per threshold in increasing order. The "<=" side is inclusive.
class ScalingSchema {
 public:
  ScalingSchema() = default;
  /// Throws std::invalid_argument on duplicate names, non-finite or
  /// non-increasing thresholds.
  explicit ScalingSchema(std::vector<ColumnScaling> columns);

  const std::vector<ColumnScaling>& columns() const noexcept { return columns_; }
  const std::vector<std::string>& literal_names() const noexcept { return literal_names_; }
  const std::vector<LiteralSource>& literal_sources() const noexcept { return sources_; }
  std::size_t literal_count() const noexcept { return literal_names_.size(); }
  std::vector<LiteralPair> literal_pairs() const;

  /// Index of a source column by name; throws std::invalid_argument if absent.
  std::size_t column_index(const std::string& name) const;

  /// Evaluates literal `lit` on a value of its source column.
  bool holds(std::size_t lit, double value) const;

 private:
  std::vector<ColumnScaling> columns_;
  std::vector<std::string> literal_names_;
  std::vector<LiteralSource> sources_;
};

struct ScalingOptions {
  /// Upper bound on thresholds per numeric column; 0 means unbounded.
  std::size_t max_thresholds = 32;
};

/// Infers a schema from training data: 0/1 columns become dichotomic, other
/// columns numeric with thresholds at midpoints between consecutive distinct
/// values, quantile-thinned to `max_thresholds`.
ScalingSchema fit_schema(const RawTable& train, const ScalingOptions& options = {});

/// Midpoints between consecutive distinct values, thinned to at most `cap`
/// evenly spaced (by rank) entries when cap > 0.
std::vector<double> midpoint_thresholds(std::vector<double> values, std::size_t cap);

/// Scales a raw table into a formal context over the schema's alphabet.
/// Throws std::invalid_argument if the schema and the table disagree on
/// columns, or on a non-finite numeric value.
FormalContext scale_table(const RawTable& table, const ScalingSchema& schema);

/// Literal description of one raw row given positionally (schema column order).
AttributeSet describe_row(const ScalingSchema& schema, std::span<const double> values);

/// Literal description of an external object keyed by column name. Every
/// schema column must be present; extra keys are ignored.
AttributeSet describe_external(const FormalContext& ctx, const ScalingSchema& schema,
                               const std::map<std::string, double>& raw_row);

}  // namespace declat
