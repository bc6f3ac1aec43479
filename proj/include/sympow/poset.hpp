#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sympow/partition.hpp"

namespace sympow {

/// The refinement order: a >= b iff b refines a (a is the coarser one).
/// Reflexive, antisymmetric, transitive; strictly coarser means strictly
/// fewer parts. Throws when the totals differ.
bool order_ge(const Partition& a, const Partition& b);

/// Cover relation of the refinement order on all partitions of one m.
struct HasseEdge {
    int lower = 0;  // index of the finer partition
    int upper = 0;  // index of the coarser partition covering it
    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/**
 * The partitions of m under the refinement order: node list in enumeration
 * order, the full relation matrix, and the Hasse diagram (transitive
 * reduction). Immutable once built and freely shareable.
 */
class PosetStructure {
public:
    int m() const noexcept { return m_; }
    const std::vector<Partition>& nodes() const noexcept { return nodes_; }
    /// Cover edges sorted by (upper, lower) enumeration index.
    const std::vector<HasseEdge>& hasse_edges() const noexcept { return edges_; }

    /// nodes()[i] >= nodes()[j] in the refinement order.
    bool ge(std::size_t i, std::size_t j) const {
        return rel_[i * nodes_.size() + j] != 0;
    }

    /// Index of a partition in nodes(); throws if p is not a partition of m.
    std::size_t index_of(const Partition& p) const;

    friend PosetStructure build_poset(int m, int jobs);

private:
    PosetStructure() = default;

    int m_ = 0;
    std::vector<Partition> nodes_;
    std::vector<unsigned char> rel_;  // row-major order matrix
    std::vector<HasseEdge> edges_;
};

/// Builds the full poset by pairwise order tests (parallelizable across
/// rows) followed by transitive reduction.
PosetStructure build_poset(int m, int jobs = 1);

/// All partitions of m with exactly k parts, in enumeration order.
/// Throws unless 1 <= k <= m.
std::vector<Partition> level_set(int m, int k);

/// The minimal elements of {q : q >= p1 and q >= p2}: a non-empty antichain
/// whose downward closures union to the intersection of the two closed
/// strata. Never empty because (m) coarsens everything.
std::vector<Partition> minimal_common_coarsenings(const Partition& p1,
                                                  const Partition& p2);

/// Graphviz DOT rendering: one node per partition labeled "2+1+1", covers
/// drawn finer -> coarser, partitions with equal part counts on one rank.
std::string to_dot(const PosetStructure& poset);

}  // namespace sympow
