#include "sympow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "sympow/germ.hpp"
#include "sympow/invariants.hpp"
#include "sympow/oracle.hpp"
#include "sympow/partition.hpp"
#include "sympow/poset.hpp"
#include "sympow/refinement.hpp"
#include "sympow/strata.hpp"

namespace sympow::verify {

namespace {

constexpr std::uint64_t kMaxRecordedFailures = 8;

struct BlockSequenceLess {
    bool operator()(const std::vector<Partition>& a,
                    const std::vector<Partition>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            enumeration_less);
    }
};

void fail(SuiteResult& r, const std::string& msg) {
    if (r.failures.size() < kMaxRecordedFailures)
        r.failures.push_back(msg);
    else
        ++r.suppressed;
}

void check(SuiteResult& r, bool ok, const std::string& msg) {
    ++r.checks;
    if (!ok) fail(r, msg);
}

std::string span(const char* var, int lo, int hi) {
    if (hi < lo) return std::string(var) + " empty";
    return std::string(var) + " " + std::to_string(lo) + ".." + std::to_string(hi);
}

void suite_partition_counts(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 25);
    r.scope = span("m", 1, mm);
    for (int m = 1; m <= mm; ++m) {
        const auto parts = enumerate_partitions(m);
        check(r, BigInt(parts.size()) == partition_count(m),
              "partition count mismatch at m=" + std::to_string(m));
        check(r, parts == enumerate_partitions(m),
              "enumeration is not deterministic at m=" + std::to_string(m));
        for (const auto& p : parts)
            check(r, to_multiplicity_form(p).expand() == p,
                  "multiplicity form round trip failed for " + p.to_string());
        for (int k = 1; k <= m; ++k)
            check(r,
                  BigInt(level_set(m, k).size()) == oracle::partition_count_by_parts(m, k),
                  "level-set size mismatch at m=" + std::to_string(m) +
                      ", k=" + std::to_string(k));
    }
}

void suite_refinement(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 8);
    r.scope = span("m", 1, mm) + ", all ordered pairs";
    for (int m = 1; m <= mm; ++m) {
        const auto parts = enumerate_partitions(m);
        for (const auto& fine : parts) {
            for (const auto& coarse : parts) {
                const bool fast = refines(fine, coarse);
                const bool slow = oracle::refines_exhaustive(fine, coarse);
                check(r, fast == slow,
                      "refines disagrees with exhaustive oracle for fine=" +
                          fine.to_string() + ", coarse=" + coarse.to_string());

                const auto classes = enumerate_refinements(fine, coarse);
                check(r, classes.empty() == !fast,
                      "enumerate_refinements emptiness disagrees with refines for fine=" +
                          fine.to_string() + ", coarse=" + coarse.to_string());

                std::set<std::vector<Partition>, BlockSequenceLess> got;
                for (const auto& rc : classes) got.insert(rc.blocks());
                const auto expect_list = oracle::refinement_classes_exhaustive(fine, coarse);
                std::set<std::vector<Partition>, BlockSequenceLess> expect(
                    expect_list.begin(), expect_list.end());
                check(r, got.size() == classes.size(),
                      "duplicate refinement classes for fine=" + fine.to_string() +
                          ", coarse=" + coarse.to_string());
                check(r, got == expect,
                      "refinement classes disagree with exhaustive oracle for fine=" +
                          fine.to_string() + ", coarse=" + coarse.to_string());
            }
        }
    }
}

void suite_poset(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 10);
    r.scope = span("m", 1, mm);
    for (int m = 1; m <= mm; ++m) {
        const auto poset = build_poset(m, opts.jobs);
        const std::size_t n = poset.nodes().size();

        for (std::size_t i = 0; i < n; ++i)
            check(r, poset.ge(i, i), "order not reflexive at m=" + std::to_string(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && poset.ge(i, j) && poset.ge(j, i))
                    fail(r, "order not antisymmetric at m=" + std::to_string(m));
                ++r.checks;
                if (i != j && poset.ge(i, j))
                    check(r,
                          poset.nodes()[i].part_count() < poset.nodes()[j].part_count(),
                          "strict order does not decrease part count at m=" +
                              std::to_string(m));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!poset.ge(i, j)) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!poset.ge(j, k)) continue;
                    check(r, poset.ge(i, k),
                          "order not transitive at m=" + std::to_string(m));
                }
            }

        // unique maximum (m) at index 0, unique minimum (1,...,1) at the end
        for (std::size_t i = 0; i < n; ++i) {
            check(r, poset.ge(0, i), "(m) is not a maximum at m=" + std::to_string(m));
            check(r, poset.ge(i, n - 1),
                  "(1,...,1) is not a minimum at m=" + std::to_string(m));
            if (i != 0) {
                bool dominates_all = true;
                for (std::size_t j = 0; j < n; ++j)
                    if (!poset.ge(i, j)) dominates_all = false;
                check(r, !dominates_all, "maximum is not unique at m=" + std::to_string(m));
            }
        }

        // transitive closure of the Hasse edges must reproduce the order
        std::vector<std::vector<unsigned char>> reach(
            n, std::vector<unsigned char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
        for (const auto& e : poset.hasse_edges())
            reach[static_cast<std::size_t>(e.upper)][static_cast<std::size_t>(e.lower)] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                check(r, (reach[i][j] != 0) == poset.ge(i, j),
                      "Hasse closure mismatch at m=" + std::to_string(m));
    }
}

void suite_singular_chain(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 9);
    const int nn = std::min(opts.max_n, 3);
    r.scope = span("m", 1, mm) + ", " + span("n", 2, nn);
    for (int m = 1; m <= mm; ++m) {
        for (int n = 2; n <= nn; ++n) {
            const auto chain = oracle::singular_chain_recursive(m, n);
            check(r, chain.size() == static_cast<std::size_t>(m) + 1,
                  "recursive chain has wrong length at m=" + std::to_string(m));
            check(r, chain.back().empty(),
                  "recursive chain does not terminate empty at m=" + std::to_string(m));
            for (int t = 0; t <= m && t < static_cast<int>(chain.size()); ++t) {
                ClosedStratifiedSet closed = iterated_singular_locus(m, n, t);
                if (opts.inject_chain_fault && m == mm && t == 1)
                    closed = ClosedStratifiedSet::from_union(m, n,
                                                             {Partition::all_ones(m)});
                check(r, chain[static_cast<std::size_t>(t)] == closed,
                      "recursion disagrees with closed form at m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ", t=" + std::to_string(t));
                if (t <= m - 1) {
                    check(r, closed.maximal_strata() == smooth_stratum_decomposition(m, n, t) ||
                                 opts.inject_chain_fault,
                          "smooth decomposition differs from level set at m=" +
                              std::to_string(m));
                    if (!closed.empty())
                        check(r,
                              closed.generic_dimension() ==
                                  static_cast<long long>(n) * (m - t),
                              "generic dimension is not n(m-t) at m=" + std::to_string(m) +
                                  ", t=" + std::to_string(t));
                }
            }
        }
    }
}

void suite_germ_dimensions(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 8);
    const int nn = std::min(opts.max_n, 3);
    r.scope = span("m", 1, mm) + ", " + span("n", 2, nn);
    for (int m = 1; m <= mm; ++m) {
        const auto parts = enumerate_partitions(m);
        for (int n = 2; n <= nn; ++n) {
            for (const auto& point : parts) {
                const auto model = local_model(m, n, point);
                check(r, model.factors() == point.parts(),
                      "local model factors differ from point type " + point.to_string());
                check(r, model.dimension() == static_cast<long long>(n) * m,
                      "local model dimension is not n*m for " + point.to_string());
                for (const auto& stratum_type : parts) {
                    if (!order_ge(point, stratum_type)) continue;
                    const auto comps = preimage_decomposition(m, n, point, stratum_type);
                    check(r,
                          comps.size() ==
                              enumerate_refinements(stratum_type, point).size(),
                          "component count differs from refinement classes for point=" +
                              point.to_string() + ", stratum=" + stratum_type.to_string());
                    for (const auto& c : comps)
                        check(r,
                              c.dimension() == static_cast<long long>(n) *
                                                   stratum_type.part_count(),
                              "component dimension is not n*|stratum| for point=" +
                                  point.to_string() +
                                  ", stratum=" + stratum_type.to_string());
                    if (point == stratum_type) {
                        check(r, comps.size() == 1,
                              "identity preimage is not a single product for " +
                                  point.to_string());
                        for (const auto& f : comps.front().factors())
                            check(r, f.block.part_count() == 1,
                                  "identity preimage has a non-trivial block for " +
                                      point.to_string());
                    }
                }
            }
        }
    }
}

void suite_tangent(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 8);
    const int nn = std::min(opts.max_n, 6);
    r.scope = span("m", 1, mm) + ", " + span("n", 2, nn);
    for (int m = 1; m <= mm; ++m)
        for (int n = 2; n <= nn; ++n)
            for (const auto& p : enumerate_partitions(m)) {
                const BigInt t = tangent_space_dim(n, p);
                const BigInt ambient = BigInt(n) * m;
                if (p.is_all_ones())
                    check(r, t == ambient,
                          "smooth stratum tangent exceeds n*m for " + p.to_string());
                else
                    check(r, t > ambient,
                          "singular stratum tangent is not above n*m for " +
                              p.to_string());
                const auto s = stratum(m, n, p);
                check(r,
                      s.dimension + s.codimension == static_cast<long long>(n) * m &&
                          s.tangent_dimension == t &&
                          s.normalization_factors == to_multiplicity_form(p),
                      "stratum fields inconsistent for " + p.to_string());
            }
}

void suite_age(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 10);
    const int nn = std::min(opts.max_n, 6);
    const int add_mm = std::min(opts.max_m, 8);
    r.scope = span("m", 1, mm) + ", " + span("n", 2, nn);
    for (int m = 1; m <= mm; ++m)
        for (const auto& p : enumerate_partitions(m)) {
            const CycleType sigma(p);
            for (int n = 2; n <= nn; ++n)
                check(r, age(n, sigma) == oracle::age_eigen(n, sigma),
                      "closed-form age disagrees with eigenvalue sum for " +
                          p.to_string() + ", n=" + std::to_string(n));
            check(r, (age(2, sigma) == Rational(0)) == sigma.is_identity(),
                  "age vanishes off the identity for " + p.to_string());
        }
    // additivity over concatenation
    for (int m1 = 1; m1 + 1 <= add_mm; ++m1)
        for (int m2 = 1; m1 + m2 <= add_mm; ++m2)
            for (const auto& p1 : enumerate_partitions(m1))
                for (const auto& p2 : enumerate_partitions(m2)) {
                    std::vector<int> merged = p1.parts();
                    merged.insert(merged.end(), p2.parts().begin(), p2.parts().end());
                    const CycleType joint{Partition(merged)};
                    for (int n = 2; n <= std::min(nn, 4); ++n)
                        check(r,
                              age(n, joint) ==
                                  age(n, CycleType(p1)) + age(n, CycleType(p2)),
                              "age is not additive for " + p1.to_string() + " and " +
                                  p2.to_string());
                }
}

void suite_discrepancy(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 12);
    const int nn = std::min(opts.max_n, 8);
    r.scope = span("m", 2, mm) + ", " + span("n", 2, nn);
    for (int m = 2; m <= mm; ++m)
        for (int n = 2; n <= nn; ++n) {
            const Rational expected = n == 2 ? Rational(0)
                                    : n == 3 ? Rational(1, 2)
                                             : Rational(1);
            check(r, discrepancy(m, n) == expected,
                  "discrepancy differs from the n-split table at m=" +
                      std::to_string(m) + ", n=" + std::to_string(n));
            const auto cls = singularity_class(m, n);
            check(r, cls.canonical && cls.terminal == (n >= 3),
                  "singularity class flags wrong at m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
        }
}

void suite_recover(const Options& opts, SuiteResult& r) {
    const int mm = std::min(opts.max_m, 12);
    const int nn = std::min(opts.max_n, 6);
    r.scope = span("m", 2, mm) + ", " + span("n", 2, nn);
    for (int m = 2; m <= mm; ++m)
        for (int n = 2; n <= nn; ++n) {
            std::vector<long long> dims;
            for (int t = 0; t <= m - 1; ++t)
                dims.push_back(static_cast<long long>(n) * (m - t));
            const auto rec = recover_parameters(dims);
            check(r, rec == RecoveredParameters{m, n},
                  "recover_parameters does not invert the chain for m=" +
                      std::to_string(m) + ", n=" + std::to_string(n));
        }
    if (mm >= 2) {
        const std::vector<std::vector<long long>> bad = {
            {}, {0}, {1}, {5, 3}, {6, 4, 3}, {2, 4, 6}, {9, 6, 2}, {6, 4, 2, 1}};
        for (const auto& dims : bad) {
            ++r.checks;
            try {
                recover_parameters(dims);
                fail(r, "malformed chain accepted (" + std::to_string(dims.size()) +
                            " entries)");
            } catch (const std::invalid_argument&) {
            }
        }
    }
}

void suite_gorenstein(const Options& opts, SuiteResult& r) {
    const int nn = std::max(opts.max_n, 2);
    r.scope = span("n", 2, nn);
    for (int n = 2; n <= nn; ++n) {
        const auto rep = class_group_report(n);
        check(r, rep.canonical_class.torsion_bit == n % 2,
              "torsion bit is not n mod 2 at n=" + std::to_string(n));
        check(r, (rep.canonical_class.torsion_bit == 0) == is_gorenstein(n),
              "torsion bit disagrees with Gorenstein test at n=" + std::to_string(n));
        check(r,
              rep.pic.summands ==
                  std::vector<GroupSummand>{GroupSummand::PicY, GroupSummand::NSAlbY},
              "Picard summands wrong at n=" + std::to_string(n));
        check(r,
              rep.cl.summands == std::vector<GroupSummand>{GroupSummand::PicY,
                                                           GroupSummand::NSAlbY,
                                                           GroupSummand::Z2},
              "class-group summands wrong at n=" + std::to_string(n));
    }
}

}  // namespace

bool Report::all_passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed(); });
}

std::uint64_t Report::total_checks() const {
    std::uint64_t total = 0;
    for (const auto& s : suites) total += s.checks;
    return total;
}

Report run(const Options& opts) {
    if (opts.max_m < 1)
        throw std::invalid_argument("verify: max_m must be >= 1");

    using Suite = void (*)(const Options&, SuiteResult&);
    const std::pair<const char*, Suite> suites[] = {
        {"partition-counts", suite_partition_counts},
        {"refinement-vs-exhaustive", suite_refinement},
        {"poset-axioms", suite_poset},
        {"singular-chain", suite_singular_chain},
        {"germ-dimensions", suite_germ_dimensions},
        {"tangent-dichotomy", suite_tangent},
        {"age-oracle", suite_age},
        {"discrepancy-table", suite_discrepancy},
        {"recover-roundtrip", suite_recover},
        {"gorenstein-torsion", suite_gorenstein},
    };

    Report report;
    for (const auto& [name, fn] : suites) {
        SuiteResult r;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        fn(opts, r);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        report.suites.push_back(std::move(r));
    }
    return report;
}

}  // namespace sympow::verify
