#pragma once

#include <cstddef>

#include "declat/context.hpp"
#include "declat/lattice.hpp"

namespace declat::oracle {

/// Largest alphabet enumerate_concepts accepts.
inline constexpr std::size_t max_enumerable_attributes = 24;

/// Every formal concept of `ctx`, found by closing all 2^|M| attribute
/// subsets. Slow on purpose. Throws std::invalid_argument when
/// |M| > max_enumerable_attributes.
ConceptSet enumerate_concepts(const FormalContext& ctx);

/// True iff intent-of(extent) == intent and extent-of(intent) == extent,
/// checked directly against the incidence relation.
bool is_formal_concept(const FormalContext& ctx, const ObjectSet& extent,
                       const AttributeSet& intent);

}  // namespace declat::oracle
