#pragma once

#include <json.hpp>

#include "partalg/diagram.hpp"
#include "partalg/grothendieck.hpp"
#include "partalg/halfdiagram.hpp"
#include "partalg/walled.hpp"

namespace partalg {

using Json = nlohmann::ordered_json;

Json to_json(const IntegerPartition& shape);
Json to_json(const AlgebraElement& element);
Json to_json(const HalfDiagram& half);
Json to_json(const WallTuple& tuple);
Json to_json(const FiltrationRecord& record);
Json to_json(const RestrictionDecomposition& decomposition);
// {"constants":[{"r":..,"lambda":[..],"a":..}]}
Json constants_json(const std::map<ClassLabel, BigInt>& constants);
Json ring_table_json(const std::vector<RingTableRow>& rows);

}  // namespace partalg
