#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bupoly/search.hpp"

namespace bupoly {

enum class OutputFormat { Text, JsonLines };

std::string tool_version();

/// One finding as a structured record:
///   {"type": "finding", "poly_hex", "poly_symbolic", "degree", "omega",
///    "factors": [...], "certificate": [...], "tag"}
/// Factor strings are single prime powers such as "(1+x+x^2)^2".
nlohmann::json finding_to_json(const Finding& f);
/// Inverse of finding_to_json. Throws on inconsistent records (hex and
/// symbolic forms disagreeing, factors not multiplying out).
Finding finding_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const SearchSpec& spec);

/// One human-readable line: tag, factored form with names, hex.
std::string render_finding_text(const Finding& f);

/// Writes a search report. JSON lines: a "spec" header record, one
/// "finding" record per finding, a closing "summary" record. Each line is
/// flushed as it is written.
void write_search_report(std::ostream& out, const SearchSpec& spec, const std::vector<Finding>& findings,
                         double seconds, OutputFormat format);

}  // namespace bupoly
