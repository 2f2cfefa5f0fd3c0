#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "declat/context.hpp"
#include "declat/forest.hpp"
#include "declat/tree.hpp"

namespace declat {

/// Formal concept (A, B) with A' = B and B' = A.
struct Concept {
  ObjectSet extent;
  AttributeSet intent;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// c1 <= c2 iff c1's extent is contained in c2's extent.
bool is_subconcept(const Concept& c1, const Concept& c2);

/// The concept generated by an attribute set: (B', B'').
Concept concept_of(const FormalContext& ctx, const AttributeSet& attrs);

/// (M', M).
Concept bottom_concept(const FormalContext& ctx);

/// Concepts of one context, deduplicated by extent, in insertion order.
class ConceptSet {
 public:
  ConceptSet() = default;
  ConceptSet(std::size_t object_count, std::size_t attribute_count)
      : object_count_(object_count), attribute_count_(attribute_count) {}

  /// Inserts unless a concept with the same extent exists. Returns the id of
  /// the stored concept and whether it was inserted.
  std::pair<std::size_t, bool> insert(Concept c);
  /// Inserts (extent, intent(extent)) unless the extent is already present;
  /// the intent is only computed for new extents. `extent` must be closed.
  std::pair<std::size_t, bool> insert_extent(const FormalContext& ctx, ObjectSet extent);
  /// Same as insert, and remembers the id as the bottom concept.
  std::size_t insert_bottom(Concept c);

  std::optional<std::size_t> find(const ObjectSet& extent) const;
  bool contains(const Concept& c) const;

  std::size_t size() const noexcept { return concepts_.size(); }
  bool empty() const noexcept { return concepts_.empty(); }
  const Concept& operator[](std::size_t id) const { return concepts_.at(id); }
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  std::optional<std::size_t> bottom_id() const noexcept { return bottom_; }
  std::size_t object_count() const noexcept { return object_count_; }
  std::size_t attribute_count() const noexcept { return attribute_count_; }

 private:
  std::vector<Concept> concepts_;
  std::unordered_map<ObjectSet, std::size_t> index_;
  std::optional<std::size_t> bottom_;
  std::size_t object_count_ = 0;
  std::size_t attribute_count_ = 0;
};

/// Closes every node premise of `tree` in the full context `ctx`, one
/// concept per node in node order, without deduplication.
std::vector<Concept> close_premises(const FormalContext& ctx, const DecisionTreeModel& tree);

/// Closed premises of all nodes plus the bottom concept, deduplicated by
/// extent. Throws std::invalid_argument when the tree was trained on a
/// different alphabet or object set size.
ConceptSet concepts_from_tree(const FormalContext& ctx, const DecisionTreeModel& tree);

/// Union of concepts_from_tree over all trees of the forest.
ConceptSet concepts_from_forest(const FormalContext& ctx, const ForestModel& forest);

}  // namespace declat
