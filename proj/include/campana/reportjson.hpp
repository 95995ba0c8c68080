#pragma once
//
// JSON serialization of reports plus a structural validator mirroring
// schema/report.schema.json.

#include <json.hpp>

#include "campana/counting.hpp"
#include "campana/report.hpp"

namespace campana {

// kind: "rigorous" for interval-style tails, "heuristic" for estimated ones
nlohmann::json constant_to_json(const ConstantReport& rep, const std::string& kind);

nlohmann::json count_record_to_json(const CountRecord& rec);

// structural check of a constants report object against the published schema
bool validate_constant_json(const nlohmann::json& j, std::string* why = nullptr);

}  // namespace campana
