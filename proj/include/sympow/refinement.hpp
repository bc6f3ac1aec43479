#pragma once

#include <cstddef>
#include <vector>

#include "sympow/partition.hpp"

namespace sympow {

/**
 * One equivalence class of refinements of `coarse` by `fine`: a grouping of
 * fine's parts into |coarse| indexed blocks, where block i sums to the i-th
 * coarse part. Two groupings are equivalent when the per-index block
 * multisets coincide; each class is represented by its canonical sequence of
 * block partitions. Coarse parts at distinct indices stay distinguishable
 * even when equal in value.
 */
class RefinementClass {
public:
    RefinementClass(Partition fine, Partition coarse, std::vector<Partition> blocks);

    const Partition& fine() const noexcept { return fine_; }
    const Partition& coarse() const noexcept { return coarse_; }
    const std::vector<Partition>& blocks() const noexcept { return blocks_; }
    /// The block partition landing on the i-th coarse part (bounds-checked).
    const Partition& block(std::size_t i) const;

    friend bool operator==(const RefinementClass&, const RefinementClass&) = default;

private:
    Partition fine_;
    Partition coarse_;
    std::vector<Partition> blocks_;
};

/// True iff fine's parts can be grouped into |coarse| blocks whose sums are
/// coarse's parts. Decided by backtracking over the residual-capacity
/// multiset with memoization; this is a multiway-number-partitioning variant.
/// Throws std::invalid_argument when the totals differ.
bool refines(const Partition& fine, const Partition& coarse);

/// All refinement classes of `coarse` by `fine`, one representative each,
/// sorted by the canonical key (lexicographic on the block sequence, coarser
/// blocks first). Empty iff refines(fine, coarse) is false.
std::vector<RefinementClass> enumerate_refinements(const Partition& fine,
                                                   const Partition& coarse);

}  // namespace sympow
