#pragma once

// JSON and CSV views of every report type. Counts are decimal strings;
// run times live under a separate "timings" key so the rest is byte-stable.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "g2inst/ale_index.hpp"
#include "g2inst/census.hpp"
#include "g2inst/orbifold.hpp"
#include "g2inst/property.hpp"
#include "g2inst/symmetry.hpp"

namespace g2inst {

using Json = nlohmann::ordered_json;

inline std::string count_string(std::uint64_t n) { return std::to_string(n); }

Json to_json(const std::vector<PropertyResult>& results);
Json to_json(const SingularSetReport& report);
Json to_json(const RelationTable& table);
/// Without timing fields.
Json to_json(const CensusReport& report);
Json to_json(const AutomorphismReport& report);
Json to_json(const OrbitReport& report, bool with_representatives);
Json to_json(const IndexInput& input, const IndexResult& result, TraceConvention convention);

/// Inverse of to_json(CensusReport); throws std::invalid_argument on bad input.
CensusReport census_from_json(const Json& j);

/// Header plus one row of ten letters per assignment.
std::string orbit_csv(std::span<const PackedAssignment> representatives);

/// 64-bit FNV-1a of a string.
std::uint64_t fnv1a(const std::string& text);

}  // namespace g2inst
