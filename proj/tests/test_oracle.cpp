#include <doctest.h>

#include <stdexcept>

#include "sympow/oracle.hpp"
#include "sympow/poset.hpp"

using namespace sympow;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("refines_exhaustive examples") {
    CHECK(oracle::refines_exhaustive(P({2, 1, 1}), P({2, 2})));
    CHECK(oracle::refines_exhaustive(P({1, 1}), P({2})));
    CHECK_FALSE(oracle::refines_exhaustive(P({3, 1}), P({2, 2})));
}

TEST_CASE("refines_exhaustive scale guard") {
    CHECK_THROWS_AS(oracle::refines_exhaustive(Partition::all_ones(13), P({13})),
                    std::domain_error);
    try {
        oracle::refines_exhaustive(Partition::all_ones(13), P({13}));
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("oracle scale exceeded") != std::string::npos);
    }
    CHECK_THROWS_AS(oracle::refines_exhaustive(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("exhaustive class enumeration") {
    const auto classes = oracle::refinement_classes_exhaustive(P({2, 1, 1}), P({2, 2}));
    REQUIRE(classes.size() == 2);
    const auto one = oracle::refinement_classes_exhaustive(P({1, 1, 1}), P({2, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<Partition>{P({1, 1}), P({1})});
    CHECK(oracle::refinement_classes_exhaustive(P({2, 2}), P({3, 1})).empty());
}

TEST_CASE("recursive singular chain m=3") {
    const auto chain = oracle::singular_chain_recursive(3, 2);
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].maximal_strata() == std::vector<Partition>{P({1, 1, 1})});
    CHECK(chain[1].maximal_strata() == std::vector<Partition>{P({2, 1})});
    CHECK(chain[2].maximal_strata() == std::vector<Partition>{P({3})});
    CHECK(chain[3].empty());
}

TEST_CASE("recursive singular chain m=2, n=5") {
    const auto chain = oracle::singular_chain_recursive(2, 5);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].maximal_strata() == std::vector<Partition>{P({1, 1})});
    CHECK(chain[1].maximal_strata() == std::vector<Partition>{P({2})});
    CHECK(chain[2].empty());
}

TEST_CASE("recursive singular chain m=4 hits the two-piece level") {
    const auto chain = oracle::singular_chain_recursive(4, 2);
    REQUIRE(chain.size() == 5);
    CHECK(chain[0].maximal_strata() == std::vector<Partition>{P({1, 1, 1, 1})});
    CHECK(chain[1].maximal_strata() == std::vector<Partition>{P({2, 1, 1})});
    CHECK(chain[2].maximal_strata() == std::vector<Partition>{P({3, 1}), P({2, 2})});
    CHECK(chain[3].maximal_strata() == std::vector<Partition>{P({4})});
    CHECK(chain[4].empty());
}

TEST_CASE("recursive singular chain scale guard") {
    CHECK_THROWS_AS(oracle::singular_chain_recursive(10, 2), std::domain_error);
    CHECK_THROWS_AS(oracle::singular_chain_recursive(0, 2), std::invalid_argument);
}

TEST_CASE("age_eigen examples") {
    CHECK(oracle::age_eigen(2, CycleType(P({2}))) == Rational(1));
    CHECK(oracle::age_eigen(4, CycleType(P({1, 1, 1}))) == Rational(0));
    CHECK(oracle::age_eigen(3, CycleType(P({4}))) == Rational(9, 2));
}

TEST_CASE("two-parameter partition count recurrence") {
    CHECK(oracle::partition_count_by_parts(4, 2) == 2);
    CHECK(oracle::partition_count_by_parts(8, 3) == 5);
    CHECK(oracle::partition_count_by_parts(5, 7) == 0);
    CHECK(oracle::partition_count_by_parts(0, 0) == 1);
    for (int m = 1; m <= 12; ++m) {
        BigInt total = 0;
        for (int k = 1; k <= m; ++k) {
            CHECK(oracle::partition_count_by_parts(m, k) ==
                  BigInt(level_set(m, k).size()));
            total += oracle::partition_count_by_parts(m, k);
        }
        CHECK(total == partition_count(m));
    }
}

}  // TEST_SUITE
