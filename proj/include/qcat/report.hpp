#pragma once

// JSON serialization of verification results. Every report carries
//   {"kind", "params", "gap", "verdict", "violation"}
// plus kind-specific fields. Human-readable tables are rendered from this
// JSON, never from the report structs directly.

#include <string>

#include "json.hpp"
#include "qcat/verify.hpp"

namespace qcat {

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const GapReport& rep);
nlohmann::json to_json(const AuditReport& rep);
nlohmann::json to_json(const CounterexampleReport& rep);
nlohmann::json to_json(const SweepSummary& summary, const std::string& mode);

std::string format_table(const nlohmann::json& report);

}  // namespace qcat
