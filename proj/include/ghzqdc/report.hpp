// Machine-readable run/sweep reports. The JSON layout is documented in
// docs/report-format.md; bump kReportSchemaVersion on any breaking change.
#pragma once

#include <string>

#include "json.hpp"

#include "ghzqdc/harness.hpp"

namespace ghzqdc {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const SweepTable& table);

std::string to_csv(const RunReport& report);
std::string to_csv(const SweepTable& table);

std::string render(const RunReport& report, OutputFormat format);
std::string render(const SweepTable& table, OutputFormat format);

// UTC, ISO-8601. The only non-deterministic field of a report.
std::string utc_timestamp();

}  // namespace ghzqdc
