#pragma once

#include <vector>

#include "sympow/bigint.hpp"
#include "sympow/partition.hpp"

namespace sympow {

/**
 * Geometry of one multiplicity stratum of the m-th symmetric power of a
 * smooth n-fold: cycles whose multiplicity profile coarsens to `type`. The
 * base variety never appears computationally; everything derives from
 * (m, n, type). The normalization is the product of symmetric powers
 * S^{r_i}Y, one factor per distinct part value with multiplicity r_i.
 */
struct Stratum {
    int m = 0;
    int n = 0;
    Partition type;
    long long dimension = 0;    // n * |type|
    long long codimension = 0;  // n * (m - |type|)
    MultiplicityForm normalization_factors;
    BigInt tangent_dimension;   // Zariski tangent dimension at a generic point
};

/**
 * A closed union of strata in canonical form: the antichain of order-minimal
 * partitions (those label the maximal closed strata; everything above them
 * is contained in their closures).
 */
class ClosedStratifiedSet {
public:
    /// Reduces an arbitrary union of strata labels to the canonical antichain.
    static ClosedStratifiedSet from_union(int m, int n, std::vector<Partition> members);
    static ClosedStratifiedSet empty_set(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const std::vector<Partition>& maximal_strata() const noexcept { return strata_; }
    bool empty() const noexcept { return strata_.empty(); }
    /// n * max part count over the antichain; throws on the empty set.
    long long generic_dimension() const;

    friend bool operator==(const ClosedStratifiedSet&, const ClosedStratifiedSet&) = default;

private:
    ClosedStratifiedSet(int m, int n) : m_(m), n_(n) {}
    int m_ = 0;
    int n_ = 0;
    std::vector<Partition> strata_;  // antichain, enumeration order
};

/// Populates all derived fields for the stratum of the given type.
/// Throws for n < 2.
Stratum stratum(int m, int n, const Partition& type);

/// The singular locus of one closed stratum: the antichain of covers of
/// `type` (minimal partitions strictly coarser). Empty iff type = (m).
ClosedStratifiedSet singular_locus_of_stratum(int m, int n, const Partition& type);

/// The t-fold iterated singular locus of the symmetric power: partitions
/// with exactly m - t parts for t < m, the empty set from t = m on.
ClosedStratifiedSet iterated_singular_locus(int m, int n, int t);

/// The labels of the disjoint smooth pieces of Sing^t minus Sing^{t+1}:
/// all partitions with exactly m - t parts. Requires 0 <= t <= m - 1.
std::vector<Partition> smooth_stratum_decomposition(int m, int n, int t);

/// Zariski tangent dimension sum C(n + a_i, a_i) - k, exact.
BigInt tangent_space_dim(int n, const Partition& type);

struct RecoveredParameters {
    int m = 0;
    int n = 0;
    friend bool operator==(const RecoveredParameters&, const RecoveredParameters&) = default;
};

/// Inverts the dimension chain (dim Sing^0, ..., dim Sing^{m-1}) of a
/// symmetric power: a strictly decreasing arithmetic progression
/// n*m, n*(m-1), ..., n. Anything else throws std::invalid_argument
/// ("not a symmetric-power chain").
RecoveredParameters recover_parameters(const std::vector<long long>& dims);

/// One (multiplicity, degree) component of a weighted divisor stratum label.
struct WeightedDivisorComponent {
    int multiplicity = 0;  // coefficient a of the prime divisor
    int degree = 0;        // degree d of the prime divisor
    friend bool operator==(const WeightedDivisorComponent&, const WeightedDivisorComponent&) = default;
};

/// A stratum label in the space of degree-m hypersurfaces: a multiset of
/// (a, d) pairs with sum a*d = m, stored in non-increasing (a, d) order.
using DivisorStratumLabel = std::vector<WeightedDivisorComponent>;

/// All divisor stratum labels for degree m, canonically sorted (labels in
/// descending lexicographic order). The d = 1 sublist bijects with the
/// partitions of m. No dimensions are attached: labels only.
std::vector<DivisorStratumLabel> enumerate_divisor_strata(int m);

}  // namespace sympow
