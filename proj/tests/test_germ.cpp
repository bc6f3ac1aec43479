#include <doctest.h>

#include <stdexcept>
#include <string>

#include "sympow/germ.hpp"
#include "sympow/poset.hpp"
#include "sympow/refinement.hpp"

using namespace sympow;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("germ") {

TEST_CASE("local model examples") {
    const auto smooth = local_model(4, 3, Partition::all_ones(4));
    CHECK(smooth.factors() == std::vector<int>{1, 1, 1, 1});
    CHECK(smooth.dimension() == 12);

    const auto deepest = local_model(5, 2, P({5}));
    CHECK(deepest.factors() == std::vector<int>{5});
    CHECK(deepest.dimension() == 10);

    const auto mixed = local_model(3, 4, P({2, 1}));
    CHECK(mixed.factors() == std::vector<int>{2, 1});
    CHECK(mixed.dimension() == 12);

    CHECK_THROWS_AS(local_model(4, 3, P({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(local_model(3, 1, P({2, 1})), std::invalid_argument);
}

TEST_CASE("preimage decomposition examples") {
    const auto one = preimage_decomposition(3, 2, P({2, 1}), P({1, 1, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].factors() ==
          std::vector<GermFactor>{{2, P({1, 1})}, {1, P({1})}});
    CHECK(one[0].dimension() == 6);  // n * |(1,1,1)|

    const auto two = preimage_decomposition(4, 3, P({2, 2}), P({2, 1, 1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].factors() == std::vector<GermFactor>{{2, P({2})}, {2, P({1, 1})}});
    CHECK(two[1].factors() == std::vector<GermFactor>{{2, P({1, 1})}, {2, P({2})}});
    CHECK(two[0].dimension() == 9);
    CHECK(two[1].dimension() == 9);
}

TEST_CASE("identity preimage is the smooth-locus product") {
    for (int m = 1; m <= 6; ++m)
        for (const auto& p : enumerate_partitions(m)) {
            const auto comps = preimage_decomposition(m, 2, p, p);
            REQUIRE(comps.size() == 1);
            CHECK(comps[0].dimension() == 2LL * p.part_count());
            for (std::size_t i = 0; i < comps[0].factors().size(); ++i) {
                const auto& f = comps[0].factors()[i];
                CHECK(f.ambient == p.parts()[i]);
                CHECK(f.block == P({f.ambient}));  // single-part block
            }
        }
}

TEST_CASE("preimage rejects strata that miss the point") {
    try {
        preimage_decomposition(4, 2, P({2, 2}), P({3, 1}));
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("does not pass through") != std::string::npos);
    }
    CHECK_THROWS_AS(preimage_decomposition(4, 2, P({2, 2}), P({2, 1})),
                    std::invalid_argument);  // mixed totals
}

TEST_CASE("dimension and component count consistency up to m=6") {
    for (int m = 1; m <= 6; ++m) {
        const auto parts = enumerate_partitions(m);
        for (const auto& point : parts)
            for (const auto& target : parts) {
                if (!order_ge(point, target)) continue;
                const auto comps = preimage_decomposition(m, 3, point, target);
                CHECK(comps.size() == enumerate_refinements(target, point).size());
                for (const auto& c : comps)
                    CHECK(c.dimension() == 3LL * target.part_count());
            }
    }
}

TEST_CASE("is_germ_singular") {
    CHECK_FALSE(is_germ_singular(P({7})));
    CHECK(is_germ_singular(P({2, 1})));
    CHECK(is_germ_singular(P({1, 1})));  // the first singular symmetric power
}

TEST_CASE("germ stratum product validation") {
    CHECK_THROWS_AS(GermStratumProduct(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(GermStratumProduct(2, {{3, P({2})}}), std::invalid_argument);
    CHECK_THROWS_AS(GermStratumProduct(1, {{2, P({2})}}), std::invalid_argument);
    CHECK_NOTHROW(GermStratumProduct(2, {{3, P({2, 1})}}));
}

TEST_CASE("a factor of multiplicity >= 2 appears iff the point is singular") {
    for (int m = 2; m <= 6; ++m)
        for (const auto& p : enumerate_partitions(m)) {
            const auto model = local_model(m, 2, p);
            bool has_multiple = false;
            for (int f : model.factors())
                if (f >= 2) has_multiple = true;
            CHECK(has_multiple == !p.is_all_ones());
        }
}

}  // TEST_SUITE
