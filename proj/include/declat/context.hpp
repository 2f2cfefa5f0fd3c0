#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "declat/index_set.hpp"

namespace declat {

/// A literal pair (m, not m): indices of the positive literal and its negation.
struct LiteralPair {
  std::size_t positive;
  std::size_t negative;
};

/// Binary formal context (G, M, I).
///
/// Immutable after construction. The incidence is stored twice, as object
/// rows (g') and attribute columns (m'), so both prime operators reduce to
/// word-wise intersections. Attributes may be grouped into complementary
/// literal pairs; for such a pair the two columns are exact complements.
class FormalContext {
 public:
  FormalContext() = default;

  /// Throws std::invalid_argument on dimension mismatch, duplicate names, or
  /// a literal pair whose columns are not complementary.
  FormalContext(std::vector<std::string> object_names, std::vector<std::string> attribute_names,
                std::vector<AttributeSet> rows, std::vector<LiteralPair> literal_pairs = {});

  std::size_t object_count() const noexcept { return object_names_.size(); }
  std::size_t attribute_count() const noexcept { return attribute_names_.size(); }

  const std::vector<std::string>& object_names() const noexcept { return object_names_; }
  const std::vector<std::string>& attribute_names() const noexcept { return attribute_names_; }
  const std::string& object_name(std::size_t g) const { return object_names_.at(g); }
  const std::string& attribute_name(std::size_t m) const { return attribute_names_.at(m); }
  std::optional<std::size_t> object_index(const std::string& name) const;
  std::optional<std::size_t> attribute_index(const std::string& name) const;

  /// g': the attributes of object g.
  const AttributeSet& row(std::size_t g) const { return rows_.at(g); }
  /// m': the objects having attribute m.
  const ObjectSet& column(std::size_t m) const { return columns_.at(m); }

  bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }

  const std::vector<LiteralPair>& literal_pairs() const noexcept { return pairs_; }
  std::optional<std::size_t> complement_of(std::size_t m) const;
  bool is_positive_literal(std::size_t m) const;
  /// Positive members of all literal pairs, in attribute index order.
  std::vector<std::size_t> positive_literals() const;

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  /// Attribute set from literal names; throws on an unknown name.
  AttributeSet attributes_named(const std::vector<std::string>& names) const;
  ObjectSet objects_named(const std::vector<std::string>& names) const;

  /// Literal names of a set, in index order.
  std::vector<std::string> names_of(const AttributeSet& attrs) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::unordered_map<std::string, std::size_t> object_lookup_;
  std::unordered_map<std::string, std::size_t> attribute_lookup_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
  std::vector<LiteralPair> pairs_;
  // complement_[m] == m when m has no partner.
  std::vector<std::size_t> complement_;
  std::vector<bool> positive_;
};

/// Builds a context from a dense 0/1 incidence matrix given row by row.
FormalContext build_context(std::vector<std::string> object_names,
                            std::vector<std::string> attribute_names,
                            const std::vector<std::vector<bool>>& incidence_rows,
                            std::vector<LiteralPair> literal_pairs = {});

/// Objects having every attribute of `attrs`. extent(ctx, {}) == G.
ObjectSet extent(const FormalContext& ctx, const AttributeSet& attrs);

/// Attributes shared by every object of `objs`. intent(ctx, {}) == M.
AttributeSet intent(const FormalContext& ctx, const ObjectSet& objs);

/// intent(extent(attrs)).
AttributeSet close(const FormalContext& ctx, const AttributeSet& attrs);

}  // namespace declat
