#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bilevel/b2cnf.hpp"
#include "bilevel/core.hpp"
#include "bilevel/reductions.hpp"

namespace bilevel {

using Json = nlohmann::ordered_json;

// All parsers reject unknown fields and raise InvalidInput on shape errors.

Json to_json(const BisGraph& g);
Json to_json(const IntervalInstance& inst);
Json to_json(const BilevelOutcome& outcome);
Json to_json(const B2cnfFormula& f);
Json to_json(const PlainGraph& g);
/// Metadata of a reduction: targets, constants and vertex labels.
Json metadata_json(const ReductionOutput& r, std::string_view reduction);

BisGraph graph_from_json(const Json& j);
IntervalInstance intervals_from_json(const Json& j);
BilevelOutcome outcome_from_json(const Json& j);
B2cnfFormula b2cnf_from_json(const Json& j);
/// Accepts a plain_graph file or a graph file (owners and weights ignored).
PlainGraph plain_graph_from_json(const Json& j);

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace bilevel
