#pragma once

#include <json.hpp>

#include "sympow/germ.hpp"
#include "sympow/invariants.hpp"
#include "sympow/partition.hpp"
#include "sympow/poset.hpp"
#include "sympow/refinement.hpp"
#include "sympow/strata.hpp"

namespace sympow {

// JSON conversions. Key order is fixed, so parsing and re-serializing a
// document with the same dump settings is the identity on bytes.
using Json = nlohmann::ordered_json;

/// Numbers stay JSON numbers while they fit 64 bits; anything wider becomes
/// a decimal string.
Json to_json(const BigInt& v);

Json to_json(const Partition& p);                  // [2,1,1]
Json to_json(const MultiplicityForm& mf);          // [[2,2],[1,1]]
Json to_json(const RefinementClass& rc);           // {"fine","coarse","blocks"}
Json to_json(const PosetStructure& poset);         // {"m","nodes","hasse_edges"}
Json to_json(const Stratum& s);                    // {"pi","dim","codim","normalization","tangent_dim",...}
Json to_json(const ClosedStratifiedSet& set);      // {"m","n","maximal_strata"}
Json to_json(const GermModel& g);                  // {"n","factors"}
Json to_json(const GermStratumProduct& p);         // {"factors":[{"ambient","block"}],"dim"}
Json to_json(const DivisorStratumLabel& label);    // [[a,d],...]
Json to_json(const InvariantReport& rep);

}  // namespace sympow
