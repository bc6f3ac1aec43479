#include "sympow/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympow/parallel.hpp"
#include "sympow/refinement.hpp"

namespace sympow {

bool order_ge(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw std::invalid_argument("order_ge: totals differ (" +
                                    std::to_string(a.total()) + " vs " +
                                    std::to_string(b.total()) + ")");
    return refines(b, a);
}

std::size_t PosetStructure::index_of(const Partition& p) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p, enumeration_less);
    if (it == nodes_.end() || !(*it == p))
        throw std::invalid_argument("PosetStructure::index_of: not a partition of " +
                                    std::to_string(m_));
    return static_cast<std::size_t>(it - nodes_.begin());
}

PosetStructure build_poset(int m, int jobs) {
    if (m < 1)
        throw std::invalid_argument("build_poset: m must be >= 1, got " +
                                    std::to_string(m));
    PosetStructure ps;
    ps.m_ = m;
    ps.nodes_ = enumerate_partitions(m);
    const std::size_t n = ps.nodes_.size();
    ps.rel_.assign(n * n, 0);

    unsigned char* rel = ps.rel_.data();
    const auto& nodes = ps.nodes_;
    parallel_for(n, jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                rel[i * n + j] = 1;
                continue;
            }
            // coarser partitions have strictly fewer parts
            if (nodes[i].part_count() >= nodes[j].part_count()) continue;
            rel[i * n + j] = refines(nodes[j], nodes[i]) ? 1 : 0;
        }
    });

    // Transitive reduction. A witness c with u > c > l must have a part
    // count strictly between those of u and l, so only those levels are
    // scanned.
    std::vector<std::vector<std::size_t>> by_count(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < n; ++i)
        by_count[static_cast<std::size_t>(nodes[i].part_count())].push_back(i);

    for (std::size_t u = 0; u < n; ++u) {
        const int ku = nodes[u].part_count();
        for (std::size_t l = 0; l < n; ++l) {
            if (u == l || !rel[u * n + l]) continue;
            const int kl = nodes[l].part_count();
            bool cover = true;
            for (int k = ku + 1; k < kl && cover; ++k)
                for (std::size_t c : by_count[static_cast<std::size_t>(k)])
                    if (rel[u * n + c] && rel[c * n + l]) {
                        cover = false;
                        break;
                    }
            if (cover)
                ps.edges_.push_back({static_cast<int>(l), static_cast<int>(u)});
        }
    }
    return ps;
}

std::vector<Partition> level_set(int m, int k) {
    if (m < 1)
        throw std::invalid_argument("level_set: m must be >= 1");
    if (k < 1 || k > m)
        throw std::invalid_argument("level_set: k must satisfy 1 <= k <= m, got k=" +
                                    std::to_string(k) + " for m=" + std::to_string(m));
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(m))
        if (p.part_count() == k) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> minimal_common_coarsenings(const Partition& p1,
                                                  const Partition& p2) {
    if (p1.total() != p2.total())
        throw std::invalid_argument("minimal_common_coarsenings: totals differ");
    std::vector<Partition> common;
    for (auto& q : enumerate_partitions(p1.total()))
        if (order_ge(q, p1) && order_ge(q, p2)) common.push_back(std::move(q));
    std::vector<Partition> minimal;
    for (const auto& q : common) {
        bool is_min = true;
        for (const auto& r : common)
            if (!(r == q) && order_ge(q, r)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(q);
    }
    return minimal;  // enumeration order, inherited from the scan
}

std::string to_dot(const PosetStructure& poset) {
    std::string out;
    out += "digraph partitions_" + std::to_string(poset.m()) + " {\n";
    out += "  rankdir=BT;\n";
    out += "  node [shape=box];\n";
    for (int k = 1; k <= poset.m(); ++k) {
        std::string rank;
        for (const auto& p : poset.nodes())
            if (p.part_count() == k) rank += " \"" + p.to_string() + "\";";
        if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
    }
    for (const auto& e : poset.hasse_edges()) {
        out += "  \"" + poset.nodes()[static_cast<std::size_t>(e.lower)].to_string() +
               "\" -> \"" +
               poset.nodes()[static_cast<std::size_t>(e.upper)].to_string() + "\";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace sympow
