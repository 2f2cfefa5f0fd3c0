#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "declat/context.hpp"
#include "declat/lattice.hpp"
#include "declat/tree.hpp"

namespace declat {

/// Poset of classification rules built from concept intents. Predicts with
/// the unweighted mean of the maximal rules covering a description, or the
/// fallback value when no rule covers it.
class DecisionLattice {
 public:
  DecisionLattice() = default;
  /// Throws std::invalid_argument on duplicate premises or premises of the
  /// wrong width.
  DecisionLattice(std::vector<ClassificationRule> rules, double fallback, Task task,
                  std::size_t attribute_count);

  const std::vector<ClassificationRule>& rules() const noexcept { return rules_; }
  const ClassificationRule& rule(std::size_t id) const { return rules_.at(id); }
  std::size_t size() const noexcept { return rules_.size(); }
  double fallback() const noexcept { return fallback_; }
  Task task() const noexcept { return task_; }
  std::size_t attribute_count() const noexcept { return attribute_count_; }

 private:
  std::vector<ClassificationRule> rules_;
  double fallback_ = 0.0;
  Task task_ = Task::classification;
  std::size_t attribute_count_ = 0;
};

/// One rule (B, mean of y over A) per concept with a non-empty extent, in
/// concept order; the fallback is the mean of all targets.
DecisionLattice build_rules(const FormalContext& ctx, const TargetVector& targets,
                            const ConceptSet& concepts);

/// Ids of the rules whose premise is contained in `description`.
std::vector<std::size_t> covering_rule_ids(const DecisionLattice& dl,
                                           const AttributeSet& description);

/// The ids among `ids` whose premise is not strictly contained in another's.
std::vector<std::size_t> maximal_rule_ids(const DecisionLattice& dl,
                                          std::span<const std::size_t> ids);

std::vector<ClassificationRule> covering_rules(const DecisionLattice& dl,
                                               const AttributeSet& description);
std::vector<ClassificationRule> maximal_rules(std::span<const ClassificationRule> rules);

double predict_value(const DecisionLattice& dl, const AttributeSet& description);

/// 1 iff predict_value >= threshold. Throws std::logic_error for regression.
int predict_label(const DecisionLattice& dl, const AttributeSet& description,
                  double threshold = 0.5);

}  // namespace declat
