#include "sympow/strata.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sympow/poset.hpp"

namespace sympow {

namespace {

void check_n(int n, const char* op) {
    if (n < 2)
        throw std::invalid_argument(std::string(op) +
                                    ": ambient dimension n must be >= 2, got " +
                                    std::to_string(n));
}

void check_type(int m, const Partition& type, const char* op) {
    if (type.total() != m)
        throw std::invalid_argument(std::string(op) + ": partition of " +
                                    std::to_string(type.total()) +
                                    " does not match m = " + std::to_string(m));
}

[[noreturn]] void reject_chain(const std::string& why) {
    throw std::invalid_argument("not a symmetric-power chain: " + why);
}

}  // namespace

ClosedStratifiedSet ClosedStratifiedSet::from_union(int m, int n,
                                                    std::vector<Partition> members) {
    check_n(n, "ClosedStratifiedSet");
    for (const auto& p : members) check_type(m, p, "ClosedStratifiedSet");

    std::sort(members.begin(), members.end(), enumeration_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());

    ClosedStratifiedSet set(m, n);
    // Keep the order-minimal labels: if q >= r then the stratum of q lies in
    // the closure of the stratum of r and is redundant in the union.
    for (const auto& q : members) {
        bool minimal = true;
        for (const auto& r : members)
            if (!(r == q) && order_ge(q, r)) {
                minimal = false;
                break;
            }
        if (minimal) set.strata_.push_back(q);
    }
    return set;
}

ClosedStratifiedSet ClosedStratifiedSet::empty_set(int m, int n) {
    check_n(n, "ClosedStratifiedSet");
    return ClosedStratifiedSet(m, n);
}

long long ClosedStratifiedSet::generic_dimension() const {
    if (strata_.empty())
        throw std::logic_error("ClosedStratifiedSet::generic_dimension: empty set");
    int max_parts = 0;
    for (const auto& p : strata_) max_parts = std::max(max_parts, p.part_count());
    return static_cast<long long>(n_) * max_parts;
}

Stratum stratum(int m, int n, const Partition& type) {
    check_n(n, "stratum");
    check_type(m, type, "stratum");
    const long long dim = static_cast<long long>(n) * type.part_count();
    return Stratum{m,
                   n,
                   type,
                   dim,
                   static_cast<long long>(n) * m - dim,
                   to_multiplicity_form(type),
                   tangent_space_dim(n, type)};
}

ClosedStratifiedSet singular_locus_of_stratum(int m, int n, const Partition& type) {
    check_n(n, "singular_locus_of_stratum");
    check_type(m, type, "singular_locus_of_stratum");
    std::vector<Partition> above;
    for (auto& q : enumerate_partitions(m))
        if (!(q == type) && order_ge(q, type)) above.push_back(std::move(q));
    return ClosedStratifiedSet::from_union(m, n, std::move(above));
}

ClosedStratifiedSet iterated_singular_locus(int m, int n, int t) {
    check_n(n, "iterated_singular_locus");
    if (m < 1)
        throw std::invalid_argument("iterated_singular_locus: m must be >= 1");
    if (t < 0)
        throw std::invalid_argument("iterated_singular_locus: t must be >= 0, got " +
                                    std::to_string(t));
    if (t >= m) return ClosedStratifiedSet::empty_set(m, n);
    // Partitions with exactly m - t parts are pairwise incomparable, so the
    // level set is already the canonical antichain.
    return ClosedStratifiedSet::from_union(m, n, level_set(m, m - t));
}

std::vector<Partition> smooth_stratum_decomposition(int m, int n, int t) {
    check_n(n, "smooth_stratum_decomposition");
    if (m < 1)
        throw std::invalid_argument("smooth_stratum_decomposition: m must be >= 1");
    if (t < 0 || t > m - 1)
        throw std::invalid_argument(
            "smooth_stratum_decomposition: t must satisfy 0 <= t <= m-1, got " +
            std::to_string(t));
    return level_set(m, m - t);
}

BigInt tangent_space_dim(int n, const Partition& type) {
    check_n(n, "tangent_space_dim");
    BigInt sum = 0;
    for (int a : type.parts()) sum += binomial(n + a, a);
    return sum - type.part_count();
}

RecoveredParameters recover_parameters(const std::vector<long long>& dims) {
    if (dims.empty()) reject_chain("empty dimension list");
    for (long long d : dims)
        if (d < 1) reject_chain("dimensions must be positive");

    if (dims.size() == 1) {
        // A length-1 chain is the smooth case m = 1 with dim Y = dims[0].
        if (dims[0] < 2) reject_chain("ambient dimension must be >= 2");
        if (dims[0] > std::numeric_limits<int>::max()) reject_chain("dimension out of range");
        return {1, static_cast<int>(dims[0])};
    }

    const long long n = dims[0] - dims[1];
    if (n < 2) reject_chain("step " + std::to_string(n) + " is not a valid ambient dimension");
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
        if (dims[i] - dims[i + 1] != n)
            reject_chain("dimension steps are not constant");
    if (dims.back() != n)
        reject_chain("chain does not terminate at the ambient dimension");
    const long long m = static_cast<long long>(dims.size());
    if (dims[0] != n * m)
        reject_chain("total dimension " + std::to_string(dims[0]) + " is not " +
                     std::to_string(n) + "*" + std::to_string(m));
    if (m > std::numeric_limits<int>::max() || n > std::numeric_limits<int>::max())
        reject_chain("parameters out of range");
    return {static_cast<int>(m), static_cast<int>(n)};
}

std::vector<DivisorStratumLabel> enumerate_divisor_strata(int m) {
    if (m < 1)
        throw std::invalid_argument("enumerate_divisor_strata: m must be >= 1, got " +
                                    std::to_string(m));
    // Component universe: all (a, d) with a*d <= m, descending, so that
    // non-increasing component sequences come out in descending lexicographic
    // order with no duplicates.
    std::vector<WeightedDivisorComponent> universe;
    for (int a = m; a >= 1; --a)
        for (int d = m; d >= 1; --d)
            if (a * d <= m) universe.push_back({a, d});

    std::vector<DivisorStratumLabel> out;
    DivisorStratumLabel cur;
    auto rec = [&](auto&& self, std::size_t start, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < universe.size(); ++i) {
            const auto& c = universe[i];
            if (c.multiplicity * c.degree > rem) continue;
            cur.push_back(c);
            self(self, i, rem - c.multiplicity * c.degree);
            cur.pop_back();
        }
    };
    rec(rec, 0, m);
    return out;
}

}  // namespace sympow
