#pragma once

#include <cstddef>
#include <cstdint>

#include "declat/bench/dataset.hpp"

namespace declat::bench {

/// Random binary table a0..a{d-1} with label (a0 and a1) or a2, each label
/// flipped with probability `noise`. Needs d >= 3.
Dataset make_planted_dataset(std::size_t objects, std::size_t attributes, std::uint64_t seed,
                             double noise = 0.1);

}  // namespace declat::bench
