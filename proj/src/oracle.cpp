#include "sympow/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sympow/poset.hpp"

namespace sympow::oracle {

namespace {

constexpr int kMaxFineParts = 12;
constexpr int kMaxChainM = 9;

void check_pair(const Partition& fine, const Partition& coarse, const char* op) {
    if (fine.total() != coarse.total())
        throw std::invalid_argument(std::string(op) + ": totals differ");
    if (fine.part_count() > kMaxFineParts)
        throw std::domain_error(std::string(op) + ": oracle scale exceeded (" +
                                std::to_string(fine.part_count()) + " fine parts, max " +
                                std::to_string(kMaxFineParts) + ")");
}

// Visits every assignment of fine part positions to coarse part positions
// via an odometer; sums are recomputed from scratch per assignment.
template <typename Visit>
void for_each_matching_assignment(const Partition& fine, const Partition& coarse,
                                  Visit visit) {
    const auto& parts = fine.parts();
    const auto& targets = coarse.parts();
    const std::size_t l = parts.size();
    const std::size_t k = targets.size();

    std::vector<std::size_t> assign(l, 0);
    std::vector<int> sums(k);
    for (;;) {
        std::fill(sums.begin(), sums.end(), 0);
        for (std::size_t j = 0; j < l; ++j) sums[assign[j]] += parts[j];
        // Block sums equal to the (positive) coarse parts force every block
        // non-empty, so matching assignments are automatically surjective.
        if (std::equal(sums.begin(), sums.end(), targets.begin())) {
            if (!visit(assign)) return;
        }
        std::size_t j = 0;
        while (j < l && ++assign[j] == k) {
            assign[j] = 0;
            ++j;
        }
        if (j == l) break;
    }
}

}  // namespace

bool refines_exhaustive(const Partition& fine, const Partition& coarse) {
    check_pair(fine, coarse, "refines_exhaustive");
    bool found = false;
    for_each_matching_assignment(fine, coarse, [&](const std::vector<std::size_t>&) {
        found = true;
        return false;  // stop at the first witness
    });
    return found;
}

std::vector<std::vector<Partition>> refinement_classes_exhaustive(const Partition& fine,
                                                                  const Partition& coarse) {
    check_pair(fine, coarse, "refinement_classes_exhaustive");
    const std::size_t k = static_cast<std::size_t>(coarse.part_count());

    std::set<std::vector<std::vector<int>>> classes;
    for_each_matching_assignment(fine, coarse, [&](const std::vector<std::size_t>& assign) {
        std::vector<std::vector<int>> blocks(k);
        for (std::size_t j = 0; j < assign.size(); ++j)
            blocks[assign[j]].push_back(fine.parts()[j]);
        for (auto& b : blocks) std::sort(b.begin(), b.end(), std::greater<int>());
        classes.insert(std::move(blocks));
        return true;
    });

    std::vector<std::vector<Partition>> out;
    out.reserve(classes.size());
    for (const auto& blocks : classes) {
        std::vector<Partition> bs;
        bs.reserve(k);
        for (const auto& b : blocks) bs.push_back(Partition(b));
        out.push_back(std::move(bs));
    }
    return out;
}

std::vector<ClosedStratifiedSet> singular_chain_recursive(int m, int n) {
    if (m < 1)
        throw std::invalid_argument("singular_chain_recursive: m must be >= 1");
    if (m > kMaxChainM)
        throw std::domain_error("singular_chain_recursive: oracle scale exceeded (m = " +
                                std::to_string(m) + ", max " +
                                std::to_string(kMaxChainM) + ")");

    std::vector<ClosedStratifiedSet> chain;
    chain.push_back(ClosedStratifiedSet::from_union(m, n, {Partition::all_ones(m)}));
    while (!chain.back().empty()) {
        const auto& current = chain.back().maximal_strata();
        std::vector<Partition> next;
        for (const auto& p : current) {
            const auto sing = singular_locus_of_stratum(m, n, p).maximal_strata();
            next.insert(next.end(), sing.begin(), sing.end());
        }
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                const auto meet = minimal_common_coarsenings(current[i], current[j]);
                next.insert(next.end(), meet.begin(), meet.end());
            }
        chain.push_back(ClosedStratifiedSet::from_union(m, n, std::move(next)));
    }
    return chain;
}

Rational age_eigen(int n, const CycleType& sigma) {
    if (n < 2)
        throw std::invalid_argument("age_eigen: n must be >= 2, got " + std::to_string(n));
    Rational angles(0);
    for (int c : sigma.cycles().parts())
        for (int j = 0; j < c; ++j) angles += Rational(j, c);
    return Rational(n) * angles;
}

BigInt partition_count_by_parts(int m, int k) {
    if (m < 0 || k < 0)
        throw std::invalid_argument("partition_count_by_parts: arguments must be >= 0");
    // table[i][j] = p(i, j)
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(m) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 0));
    table[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) {
            BigInt v = 0;
            if (j - 1 <= i - 1) v += table[i - 1][j - 1];
            if (i - j >= 0) v += table[i - j][j];
            table[i][j] = v;
        }
    return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

}  // namespace sympow::oracle
