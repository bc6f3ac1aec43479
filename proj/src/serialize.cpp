#include "sympow/serialize.hpp"

#include <cstdint>
#include <limits>

namespace sympow {

Json to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return static_cast<std::uint64_t>(v);
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min()))
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json to_json(const Partition& p) {
    return Json(p.parts());
}

Json to_json(const MultiplicityForm& mf) {
    Json j = Json::array();
    for (const auto& c : mf.classes()) j.push_back({c.value, c.multiplicity});
    return j;
}

Json to_json(const RefinementClass& rc) {
    Json blocks = Json::array();
    for (const auto& b : rc.blocks()) blocks.push_back(to_json(b));
    return Json{{"fine", to_json(rc.fine())},
                {"coarse", to_json(rc.coarse())},
                {"blocks", std::move(blocks)}};
}

Json to_json(const PosetStructure& poset) {
    Json nodes = Json::array();
    for (const auto& p : poset.nodes()) nodes.push_back(to_json(p));
    Json edges = Json::array();
    for (const auto& e : poset.hasse_edges())
        edges.push_back({to_json(poset.nodes()[static_cast<std::size_t>(e.lower)]),
                         to_json(poset.nodes()[static_cast<std::size_t>(e.upper)])});
    return Json{{"m", poset.m()}, {"nodes", std::move(nodes)},
                {"hasse_edges", std::move(edges)}};
}

Json to_json(const Stratum& s) {
    return Json{{"pi", to_json(s.type)},
                {"dim", s.dimension},
                {"codim", s.codimension},
                {"normalization", to_json(s.normalization_factors)},
                {"tangent_dim", to_json(s.tangent_dimension)},
                {"num_parts", s.type.part_count()},
                {"germ_singular", is_germ_singular(s.type)}};
}

Json to_json(const ClosedStratifiedSet& set) {
    Json strata = Json::array();
    for (const auto& p : set.maximal_strata()) strata.push_back(to_json(p));
    return Json{{"m", set.m()}, {"n", set.n()}, {"maximal_strata", std::move(strata)}};
}

Json to_json(const GermModel& g) {
    return Json{{"n", g.n()}, {"factors", g.factors()}};
}

Json to_json(const GermStratumProduct& p) {
    Json factors = Json::array();
    for (const auto& f : p.factors())
        factors.push_back(Json{{"ambient", f.ambient}, {"block", to_json(f.block)}});
    return Json{{"factors", std::move(factors)}, {"dim", p.dimension()}};
}

Json to_json(const DivisorStratumLabel& label) {
    Json j = Json::array();
    for (const auto& c : label) j.push_back({c.multiplicity, c.degree});
    return j;
}

Json to_json(const InvariantReport& rep) {
    Json pic = Json::array();
    for (auto s : rep.groups.pic.summands) pic.push_back(std::string(summand_name(s)));
    Json cl = Json::array();
    for (auto s : rep.groups.cl.summands) cl.push_back(std::string(summand_name(s)));
    return Json{{"m", rep.m},
                {"n", rep.n},
                {"discrepancy", fraction_string(rep.discrep)},
                {"canonical", rep.sclass.canonical},
                {"terminal", rep.sclass.terminal},
                {"gorenstein", rep.gorenstein},
                {"pic", std::move(pic)},
                {"cl", std::move(cl)},
                {"K_X",
                 Json{{"pic", rep.groups.canonical_class.pic_component},
                      {"ns", rep.groups.canonical_class.ns_component},
                      {"torsion", rep.groups.canonical_class.torsion_bit}}},
                {"hypotheses", rep.groups.hypotheses}};
}

}  // namespace sympow
