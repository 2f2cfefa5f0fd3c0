#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "declat/tree.hpp"

namespace declat {

struct ForestConfig {
  std::size_t tree_count = 10;
  bool bootstrap = true;
  /// Per-split share of positive literals. When empty: sqrt(P)/P for
  /// classification and 1/3 for regression, P being the positive literal count.
  std::optional<double> feature_fraction;
  TreeConfig tree;  // its feature_fraction is overridden by the field above
  std::uint64_t seed = 0;
  /// Worker threads for training; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  void validate() const;
};

/// Bagged ensemble: tree i is trained on samples[i] (with multiplicities
/// counts[i] when bootstrapping).
class ForestModel {
 public:
  ForestModel() = default;
  ForestModel(std::vector<DecisionTreeModel> trees, std::vector<ObjectSet> samples,
              std::vector<std::vector<unsigned>> counts, ForestConfig config);

  const std::vector<DecisionTreeModel>& trees() const noexcept { return trees_; }
  const std::vector<ObjectSet>& samples() const noexcept { return samples_; }
  const std::vector<std::vector<unsigned>>& counts() const noexcept { return counts_; }
  const ForestConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return trees_.size(); }
  std::size_t node_count() const;

 private:
  std::vector<DecisionTreeModel> trees_;
  std::vector<ObjectSet> samples_;
  std::vector<std::vector<unsigned>> counts_;
  ForestConfig config_;
};

/// Multiplicities of n draws with replacement from n objects.
std::vector<unsigned> bootstrap_counts(std::size_t n_objects, Rng& rng);

/// Distinct objects of n draws with replacement from n objects.
ObjectSet bootstrap_sample(std::size_t n_objects, Rng& rng);

/// Effective per-split literal share for a context and task.
double resolved_feature_fraction(const ForestConfig& config, const FormalContext& ctx, Task task);

/// Per-tree seeds are drawn from `rng` up front, so the result does not
/// depend on how training is scheduled across threads.
ForestModel fit_forest(const FormalContext& ctx, const TargetVector& targets,
                       const ForestConfig& config, Rng& rng);

/// Same as above with an Rng seeded from config.seed.
ForestModel fit_forest(const FormalContext& ctx, const TargetVector& targets,
                       const ForestConfig& config);

/// Unweighted mean of the member trees' predictions.
double predict_forest(const ForestModel& forest, const AttributeSet& description);

}  // namespace declat
