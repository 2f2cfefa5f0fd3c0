#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "declat/context.hpp"

namespace declat {

using Rng = std::mt19937_64;

enum class Task { classification, regression };

const char* to_string(Task task);
Task task_from_string(const std::string& s);

/// Per-object targets of a context. Classification targets are 0/1.
class TargetVector {
 public:
  TargetVector() = default;
  /// Throws std::invalid_argument on non-finite values, or on values other
  /// than 0/1 for classification.
  TargetVector(std::vector<double> values, Task task);

  Task task() const noexcept { return task_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t g) const { return values_[g]; }
  const std::vector<double>& values() const noexcept { return values_; }
  double mean() const;

 private:
  std::vector<double> values_;
  Task task_ = Task::classification;
};

/// (premise, prediction) with the number of training objects it describes.
struct ClassificationRule {
  AttributeSet premise;
  double prediction = 0.0;
  std::size_t support = 0;
};

using NodeId = std::size_t;

struct TreeNode {
  AttributeSet premise;
  ObjectSet objects;         // distinct training objects reaching the node
  double prediction = 0.0;   // multiplicity-weighted mean target
  double weight = 0.0;       // total multiplicity of `objects`
  std::size_t depth = 0;
  std::optional<NodeId> parent;
  std::optional<std::size_t> split_literal;  // positive literal sent left
  std::optional<std::pair<NodeId, NodeId>> children;

  bool is_leaf() const noexcept { return !children.has_value(); }
};

/// Binary CART tree over a literal alphabet. Node 0 is the root; the left
/// child adds the split literal to the premise, the right child its negation.
class DecisionTreeModel {
 public:
  DecisionTreeModel() = default;
  DecisionTreeModel(std::vector<TreeNode> nodes, Task task, std::size_t object_count,
                    std::size_t attribute_count);

  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  static constexpr NodeId root() noexcept { return 0; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const;
  std::size_t depth() const;
  Task task() const noexcept { return task_; }
  std::size_t object_count() const noexcept { return object_count_; }
  std::size_t attribute_count() const noexcept { return attribute_count_; }

 private:
  std::vector<TreeNode> nodes_;
  Task task_ = Task::classification;
  std::size_t object_count_ = 0;
  std::size_t attribute_count_ = 0;
};

struct TreeConfig {
  std::optional<std::size_t> max_depth;  // unlimited when empty
  std::size_t min_samples_leaf = 1;
  /// Share of positive literals examined per split, in (0, 1].
  double feature_fraction = 1.0;

  void validate() const;
};

/// Gini index 1 - p^2 - (1-p)^2 for classification, population variance for
/// regression. Throws std::invalid_argument on an empty subset.
double impurity(std::span<const double> targets, Task task);

struct SplitCandidate {
  std::size_t literal;
  double gain;
};

/// Literal with the largest weighted impurity decrease among `candidates`
/// (positive literals), subject to both sides holding at least
/// `min_samples_leaf` objects. Ties go to the lowest literal index. Returns
/// nothing when no admissible split has positive gain. `weights`, when
/// given, holds one multiplicity per context object.
std::optional<SplitCandidate> best_split(const FormalContext& ctx, const ObjectSet& node_objects,
                                         std::span<const std::size_t> candidates,
                                         const TargetVector& targets,
                                         std::size_t min_samples_leaf = 1,
                                         std::span<const double> weights = {});

/// Greedy CART on the objects of `sample`, each counted once.
DecisionTreeModel fit_tree(const FormalContext& ctx, const ObjectSet& sample,
                           const TargetVector& targets, const TreeConfig& config, Rng& rng);

/// Greedy CART where object g is counted `counts[g]` times (bagging).
DecisionTreeModel fit_tree_weighted(const FormalContext& ctx, std::span<const unsigned> counts,
                                    const TargetVector& targets, const TreeConfig& config,
                                    Rng& rng);

/// One rule per node, in node order.
std::vector<ClassificationRule> extract_rules(const DecisionTreeModel& tree);

/// Ids of the nodes whose premise is contained in `description`.
std::vector<NodeId> covering_nodes(const DecisionTreeModel& tree, const AttributeSet& description);

/// Prediction of the unique maximal covering rule. Throws
/// std::invalid_argument if the maximal covering rule is not a single leaf,
/// i.e. the description does not decide some split on its path.
double predict_tree(const DecisionTreeModel& tree, const AttributeSet& description);

}  // namespace declat
