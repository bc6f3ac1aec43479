#include "sympow/germ.hpp"

#include <numeric>
#include <stdexcept>

#include "sympow/poset.hpp"
#include "sympow/refinement.hpp"

namespace sympow {

namespace {

void check_n(int n, const char* op) {
    if (n < 2)
        throw std::invalid_argument(std::string(op) +
                                    ": ambient dimension n must be >= 2, got " +
                                    std::to_string(n));
}

}  // namespace

GermModel::GermModel(int n, const Partition& point_type)
    : n_(n), factors_(point_type.parts()) {
    check_n(n, "GermModel");
}

long long GermModel::dimension() const noexcept {
    return static_cast<long long>(n_) *
           std::accumulate(factors_.begin(), factors_.end(), 0LL);
}

GermStratumProduct::GermStratumProduct(int n, std::vector<GermFactor> factors)
    : n_(n), factors_(std::move(factors)) {
    check_n(n, "GermStratumProduct");
    if (factors_.empty())
        throw std::invalid_argument("GermStratumProduct: factors must be non-empty");
    for (const auto& f : factors_)
        if (f.block.total() != f.ambient)
            throw std::invalid_argument(
                "GermStratumProduct: block partition must sum to its ambient multiplicity");
}

long long GermStratumProduct::dimension() const noexcept {
    long long parts = 0;
    for (const auto& f : factors_) parts += f.block.part_count();
    return static_cast<long long>(n_) * parts;
}

GermModel local_model(int m, int n, const Partition& point_type) {
    if (point_type.total() != m)
        throw std::invalid_argument("local_model: partition of " +
                                    std::to_string(point_type.total()) +
                                    " does not match m = " + std::to_string(m));
    return GermModel(n, point_type);
}

std::vector<GermStratumProduct> preimage_decomposition(int m, int n,
                                                       const Partition& point_type,
                                                       const Partition& stratum_type) {
    check_n(n, "preimage_decomposition");
    if (point_type.total() != m || stratum_type.total() != m)
        throw std::invalid_argument("preimage_decomposition: partitions must both partition m = " +
                                    std::to_string(m));
    if (!order_ge(point_type, stratum_type))
        throw std::invalid_argument(
            "preimage_decomposition: the stratum of type " + stratum_type.to_string() +
            " does not pass through points of type " + point_type.to_string() +
            " (point type is not coarser)");

    std::vector<GermStratumProduct> out;
    for (const auto& rc : enumerate_refinements(stratum_type, point_type)) {
        std::vector<GermFactor> factors;
        factors.reserve(rc.blocks().size());
        for (std::size_t i = 0; i < rc.blocks().size(); ++i)
            factors.push_back({point_type.parts()[i], rc.block(i)});
        out.push_back(GermStratumProduct(n, std::move(factors)));
    }
    return out;
}

bool is_germ_singular(const Partition& type) {
    return type.part_count() > 1;
}

}  // namespace sympow
