#include <doctest.h>

#include "sympow/oracle.hpp"
#include "sympow/serialize.hpp"
#include "sympow/verify.hpp"

using namespace sympow;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("partitions and multiplicity forms") {
    CHECK(to_json(P({2, 1, 1})) == Json::parse("[2,1,1]"));
    CHECK(to_json(to_multiplicity_form(P({2, 2, 1}))) == Json::parse("[[2,2],[1,1]]"));
}

TEST_CASE("refinement class schema") {
    const auto classes = enumerate_refinements(P({2, 1, 1}), P({2, 2}));
    REQUIRE(classes.size() == 2);
    CHECK(to_json(classes[0]) ==
          Json::parse(R"({"fine":[2,1,1],"coarse":[2,2],"blocks":[[2],[1,1]]})"));
}

TEST_CASE("poset schema") {
    CHECK(to_json(build_poset(2)) ==
          Json::parse(R"({"m":2,"nodes":[[2],[1,1]],"hasse_edges":[[[1,1],[2]]]})"));
}

TEST_CASE("stratum schema") {
    const auto j = to_json(stratum(3, 2, P({2, 1})));
    CHECK(j["pi"] == Json::parse("[2,1]"));
    CHECK(j["dim"] == 4);
    CHECK(j["codim"] == 2);
    CHECK(j["normalization"] == Json::parse("[[2,1],[1,1]]"));
    CHECK(j["tangent_dim"] == 7);
    CHECK(j["num_parts"] == 2);
    CHECK(j["germ_singular"] == true);
}

TEST_CASE("closed set, germ model, germ product schemas") {
    CHECK(to_json(iterated_singular_locus(4, 2, 2)) ==
          Json::parse(R"({"m":4,"n":2,"maximal_strata":[[3,1],[2,2]]})"));

    CHECK(to_json(local_model(3, 4, P({2, 1}))) ==
          Json::parse(R"({"n":4,"factors":[2,1]})"));

    const auto comps = preimage_decomposition(3, 2, P({2, 1}), P({1, 1, 1}));
    REQUIRE(comps.size() == 1);
    CHECK(to_json(comps[0]) ==
          Json::parse(
              R"({"factors":[{"ambient":2,"block":[1,1]},{"ambient":1,"block":[1]}],"dim":6})"));
}

TEST_CASE("divisor stratum labels") {
    const auto labels = enumerate_divisor_strata(2);
    REQUIRE(labels.size() == 3);
    CHECK(to_json(labels[0]) == Json::parse("[[2,1]]"));
    CHECK(to_json(labels[2]) == Json::parse("[[1,1],[1,1]]"));
}

TEST_CASE("invariant report schema") {
    const auto j = to_json(invariant_report(5, 3));
    CHECK(j["m"] == 5);
    CHECK(j["n"] == 3);
    CHECK(j["discrepancy"] == "1/2");
    CHECK(j["canonical"] == true);
    CHECK(j["terminal"] == true);
    CHECK(j["gorenstein"] == false);
    CHECK(j["pic"] == Json::parse(R"x(["Pic(Y)","NS(Alb(Y))"])x"));
    CHECK(j["cl"] == Json::parse(R"x(["Pic(Y)","NS(Alb(Y))","Z/2Z"])x"));
    CHECK(j["K_X"] == Json::parse(R"({"pic":"K_Y","ns":"0","torsion":1})"));
    CHECK(j["hypotheses"] == "Y smooth projective, dim Y = n ≥ 2");

    const auto even = to_json(invariant_report(2, 4));
    CHECK(even["discrepancy"] == "1");
    CHECK(even["K_X"]["torsion"] == 0);
}

TEST_CASE("wide integers stay exact") {
    CHECK(to_json(BigInt(7)) == Json(7));
    CHECK(to_json(BigInt("18446744073709551615")).is_number_unsigned());
    const auto huge = to_json(BigInt("18446744073709551616"));  // 2^64
    CHECK(huge.is_string());
    CHECK(huge == "18446744073709551616");
}

TEST_CASE("dump and parse round trip is the identity") {
    const std::vector<Json> docs = {
        to_json(build_poset(5)),
        to_json(invariant_report(4, 3)),
        to_json(stratum(5, 3, P({2, 2, 1}))),
        to_json(iterated_singular_locus(6, 2, 3)),
    };
    for (const auto& doc : docs) {
        const std::string text = doc.dump(2);
        CHECK(Json::parse(text).dump(2) == text);
    }
}

TEST_CASE("verify report runs clean at small scale") {
    verify::Options opts;
    opts.max_m = 4;
    opts.max_n = 3;
    const auto report = verify::run(opts);
    CHECK(report.all_passed());
    CHECK(report.suites.size() == 10);
    CHECK(report.total_checks() > 0);
}

}  // TEST_SUITE
