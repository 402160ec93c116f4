#pragma once

// JSON builders for the report types. Exact (arbitrary-precision) values
// serialize as decimal strings so nothing is squeezed through a double;
// machine counts stay JSON numbers. Key order is fixed so identical inputs
// give byte-identical output.

#include <json.hpp>

#include "cubefree/bounds.hpp"
#include "cubefree/constructions.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/params.hpp"
#include "cubefree/verify.hpp"

namespace cubefree {

using Json = nlohmann::ordered_json;

Json to_json(const Params& params);
Json to_json(const Violation& violation);
Json to_json(const AlterationTrace& trace);
Json to_json(const ClampedProbability& probability);
Json to_json(const LevelProfile& profile);
Json to_json(const BoundReport& report);
Json to_json(const OracleResult& result);
Json to_json(const SandwichReport& report);

}  // namespace cubefree
