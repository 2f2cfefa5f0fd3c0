#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "declat/index_set.hpp"

namespace declat::bench {

/// 2TP / (2TP + FP + FN) for the positive class 1; 0 when nothing is
/// positive in either vector.
double f1_score(std::span<const int> y_true, std::span<const int> y_pred);

/// Weighted average percentage error: sum|y - y_hat| / sum|y|.
double wape(std::span<const double> y_true, std::span<const double> y_pred);

struct Fold {
  ObjectSet train;
  ObjectSet test;
};

/// Shuffled k-fold partition of n indices; the first n % k test folds get
/// one extra index. Throws std::invalid_argument unless 2 <= k <= n.
std::vector<Fold> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace declat::bench
