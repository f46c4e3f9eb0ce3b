#pragma once

#include "reslab/extremes.hpp"
#include "reslab/resonance.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace reslab {

using json = nlohmann::json;

json to_json(const ResonanceReport& report);
json to_json(const ScanReport& report);
json to_json(const CensusReport& report);

ResonanceReport resonance_report_from_json(const json& j);
ScanReport scan_report_from_json(const json& j);
CensusReport census_report_from_json(const json& j);

// Header plus one row.
std::string resonance_csv(const ResonanceReport& report);

// Columns q,sigma,delta,threshold,count,max_abs_l,bound,margin,exponent_emp,exponent_ref;
// empty cells for fields that do not apply.
inline constexpr const char* extremes_csv_header =
    "q,sigma,delta,threshold,count,max_abs_l,bound,margin,exponent_emp,exponent_ref";
std::string scan_csv(const ScanReport& report);
std::string census_csv(const CensusReport& report);

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to a sibling temporary file and renames it into place. Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace reslab
