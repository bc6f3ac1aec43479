#pragma once

#include <vector>

#include "sympow/partition.hpp"

namespace sympow {

/**
 * The local model of the symmetric power at a point whose multiplicity type
 * is a partition (a_1 >= ... >= a_k): a formal product of germ factors, one
 * per part, where factor a_i is the germ of the a_i-th symmetric power of
 * affine n-space at the origin cycle. A factor with a_i = 1 is the smooth
 * germ. These are symbolic certificates, not analytic objects; factor count
 * always equals the part count so dimension bookkeeping stays uniform.
 */
class GermModel {
public:
    GermModel(int n, const Partition& point_type);

    int n() const noexcept { return n_; }
    const std::vector<int>& factors() const noexcept { return factors_; }
    /// n * sum of factor multiplicities = n * m.
    long long dimension() const noexcept;

    friend bool operator==(const GermModel&, const GermModel&) = default;

private:
    int n_ = 0;
    std::vector<int> factors_;
};

/// One factor of a germ stratum product: the stratum of block-partition type
/// `block` inside the symmetric-power germ of multiplicity `ambient`.
struct GermFactor {
    int ambient = 0;
    Partition block;
    friend bool operator==(const GermFactor&, const GermFactor&) = default;
};

/// A product of germ strata, one factor per part of the point type; the
/// shape an irreducible piece of a stratum preimage takes under the local
/// model isomorphism.
class GermStratumProduct {
public:
    GermStratumProduct(int n, std::vector<GermFactor> factors);

    int n() const noexcept { return n_; }
    const std::vector<GermFactor>& factors() const noexcept { return factors_; }
    /// n * sum of block part counts.
    long long dimension() const noexcept;

    friend bool operator==(const GermStratumProduct&, const GermStratumProduct&) = default;

private:
    int n_ = 0;
    std::vector<GermFactor> factors_;
};

/// Local model of the symmetric power at a point of the given type.
GermModel local_model(int m, int n, const Partition& point_type);

/// Decomposes the preimage of the stratum of type `stratum_type` under the
/// local model at a point of type `point_type`: one product per refinement
/// class of stratum_type by point_type. Requires point_type >= stratum_type,
/// otherwise the stratum does not pass through such points and this throws.
std::vector<GermStratumProduct> preimage_decomposition(int m, int n,
                                                       const Partition& point_type,
                                                       const Partition& stratum_type);

/// A germ stratum is singular exactly when its type has more than one part.
bool is_germ_singular(const Partition& type);

}  // namespace sympow
