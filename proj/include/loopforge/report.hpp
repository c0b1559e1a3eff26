#pragma once

#include <string>

#include "json.hpp"
#include "loopforge/sbs.hpp"

namespace loopforge {

/// {"order","h","bs","sbs","ssym","aum","sa","aut","omega","theta","n_mu",
///  "n_mu_cap_h","ker_phi","checks":{<key>:{"status","detail"}}}
/// with check keys from kCheckKeys and status "pass" | "fail" | "n/a".
nlohmann::ordered_json to_json(const CardinalityReport& report);
nlohmann::ordered_json to_json(const AggregateReport& aggregate);

/// Inverse of to_json for documents that pass matches_report_schema. The
/// subgroup elements are not part of the document and are left empty.
CardinalityReport report_from_json(const nlohmann::json& doc);

/// Exact-key schema check for a serialized CardinalityReport. On failure
/// `why` (if given) names the first offending key.
bool matches_report_schema(const nlohmann::json& doc, std::string* why = nullptr);

}  // namespace loopforge
