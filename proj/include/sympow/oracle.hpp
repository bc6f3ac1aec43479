#pragma once

#include <vector>

#include "sympow/bigint.hpp"
#include "sympow/invariants.hpp"
#include "sympow/partition.hpp"
#include "sympow/strata.hpp"

namespace sympow::oracle {

// Brute-force cross-validation routines. Not performance-tuned, never
// approximate: each one either runs the full search within its scale guard
// or throws, so a passing comparison against the production path means
// something. Scale guards are hard errors, never silent truncation.

/// Same contract as refines(), decided by enumerating every map from fine
/// part positions to coarse part positions and testing the block sums.
/// Guard: at most 12 fine parts.
bool refines_exhaustive(const Partition& fine, const Partition& coarse);

/// Every refinement equivalence class found by the same full enumeration,
/// as sorted block-partition sequences (one per class, deduplicated).
/// Guard: at most 12 fine parts.
std::vector<std::vector<Partition>> refinement_classes_exhaustive(const Partition& fine,
                                                                  const Partition& coarse);

/// The iterated singular chain computed by the recursion
///   Sing(union W_i) = union Sing(W_i)  union  pairwise intersections,
/// reducing to a canonical antichain after every step, until empty. The
/// last entry is the empty set. Guard: m <= 9.
std::vector<ClosedStratifiedSet> singular_chain_recursive(int m, int n);

/// Reid-Tai age from first principles: for each cycle of length c the
/// rotation eigenvalue angles j/c, j = 0..c-1, summed exactly and scaled
/// by n. Must equal the closed-form age.
Rational age_eigen(int n, const CycleType& sigma);

/// p(m, k), the number of partitions of m with exactly k parts, by the
/// two-parameter recurrence p(m,k) = p(m-1,k-1) + p(m-k,k).
BigInt partition_count_by_parts(int m, int k);

}  // namespace sympow::oracle
