#pragma once

#include <json.hpp>

#include "veronese/cliques.hpp"
#include "veronese/ideal.hpp"
#include "veronese/invariants.hpp"
#include "veronese/lattice.hpp"
#include "veronese/order.hpp"
#include "veronese/sorting.hpp"

namespace veronese {

using Json = nlohmann::ordered_json;

/// Big integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
Json json_int(const BigInt& v);

Json to_json(const Config& config);
Config config_from_json(const Json& j);

Json to_json(const SortingSignature& sig);
Json to_json(const MaximalClique& clique);
Json to_json(const EquivalenceClass& cls);
Json to_json(const BinomialPair& pair);
Json to_json(const QuotientReport& report);
Json to_json(const InvariantReport& report);
Json to_json(const MultiplicityBounds& bounds);

Json points_to_json(const std::vector<Tuple>& points);
std::vector<Tuple> points_from_json(const Json& j);

}  // namespace veronese
