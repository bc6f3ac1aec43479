#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sympow/oracle.hpp"
#include "sympow/refinement.hpp"

using namespace sympow;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("refinement") {

TEST_CASE("refines examples") {
    CHECK(refines(P({2, 1, 1}), P({2, 2})));
    CHECK_FALSE(refines(P({2, 2}), P({3, 1})));
    CHECK_FALSE(refines(P({3, 1}), P({2, 2})));
    CHECK(refines(P({1, 1}), P({2})));

    for (int m : {1, 4, 7})
        for (const auto& p : enumerate_partitions(m)) {
            CHECK(refines(p, p));                          // identity grouping
            CHECK(refines(p, Partition::single_block(m))); // one block takes all
        }
}

TEST_CASE("refines rejects mismatched totals") {
    CHECK_THROWS_AS(refines(P({2, 1}), P({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_refinements(P({3}), P({2, 2})), std::invalid_argument);
}

TEST_CASE("enumerate_refinements examples") {
    const auto single = enumerate_refinements(P({1, 1, 1}), P({2, 1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].blocks() == std::vector<Partition>{P({1, 1}), P({1})});

    // coarse positions are indexed, so the two placements are inequivalent
    const auto two = enumerate_refinements(P({2, 1, 1}), P({2, 2}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].blocks() == std::vector<Partition>{P({2}), P({1, 1})});
    CHECK(two[1].blocks() == std::vector<Partition>{P({1, 1}), P({2})});

    const auto identity = enumerate_refinements(P({3, 2}), P({3, 2}));
    REQUIRE(identity.size() == 1);
    CHECK(identity[0].blocks() == std::vector<Partition>{P({3}), P({2})});

    CHECK(enumerate_refinements(P({3, 1}), P({2, 2})).empty());

    // degenerate: one part refines itself in exactly one way
    CHECK(enumerate_refinements(P({4}), P({4})).size() == 1);
}

TEST_CASE("block accessor") {
    const auto classes = enumerate_refinements(P({2, 1, 1}), P({2, 2}));
    REQUIRE(!classes.empty());
    CHECK(classes[0].block(0) == P({2}));
    CHECK(classes[0].block(1) == P({1, 1}));
    CHECK_THROWS_AS(classes[0].block(2), std::out_of_range);
}

TEST_CASE("class construction validates its invariants") {
    CHECK_NOTHROW(RefinementClass(P({2, 1, 1}), P({2, 2}), {P({2}), P({1, 1})}));
    // wrong block sum
    CHECK_THROWS_AS(RefinementClass(P({2, 1, 1}), P({2, 2}), {P({1, 1}), P({1, 1})}),
                    std::invalid_argument);
    // block count mismatch
    CHECK_THROWS_AS(RefinementClass(P({2, 1, 1}), P({2, 2}), {P({2, 2})}),
                    std::invalid_argument);
    // blocks do not use the fine parts
    CHECK_THROWS_AS(RefinementClass(P({2, 1, 1}), P({2, 2}), {P({2}), P({2})}),
                    std::invalid_argument);
}

TEST_CASE("emitted classes satisfy their invariants and are distinct") {
    for (int m = 1; m <= 7; ++m) {
        const auto parts = enumerate_partitions(m);
        for (const auto& fine : parts)
            for (const auto& coarse : parts) {
                const auto classes = enumerate_refinements(fine, coarse);
                std::set<std::string> seen;
                for (const auto& rc : classes) {
                    CHECK(rc.fine() == fine);
                    CHECK(rc.coarse() == coarse);
                    CHECK(rc.blocks().size() ==
                          static_cast<std::size_t>(coarse.part_count()));
                    std::string key;
                    for (const auto& b : rc.blocks()) key += b.to_string() + "|";
                    CHECK(seen.insert(key).second);
                }
            }
    }
}

TEST_CASE("solver and class list agree with the exhaustive oracle up to m=6") {
    for (int m = 1; m <= 6; ++m) {
        const auto parts = enumerate_partitions(m);
        for (const auto& fine : parts)
            for (const auto& coarse : parts) {
                const bool fast = refines(fine, coarse);
                CHECK(fast == oracle::refines_exhaustive(fine, coarse));

                const auto classes = enumerate_refinements(fine, coarse);
                CHECK(classes.empty() == !fast);

                const auto expected = oracle::refinement_classes_exhaustive(fine, coarse);
                REQUIRE(classes.size() == expected.size());
                std::set<std::string> a, b;
                for (const auto& rc : classes) {
                    std::string key;
                    for (const auto& blk : rc.blocks()) key += blk.to_string() + "|";
                    a.insert(key);
                }
                for (const auto& blocks : expected) {
                    std::string key;
                    for (const auto& blk : blocks) key += blk.to_string() + "|";
                    b.insert(key);
                }
                CHECK(a == b);
            }
    }
}

}  // TEST_SUITE
