#pragma once

#include <iosfwd>

#include "jensenlab/experiments.hpp"

namespace jensenlab {

enum class ReportFormat { text, json, csv };

ReportFormat parse_report_format(const std::string& name);

nlohmann::json report_to_json(const ExperimentReport& rep);

// Serialized report. JSON output is byte-stable for a fixed report (keys
// sorted, shortest round-trip doubles); the wall_clock_ms field is the only
// part that varies between identical runs.
std::string emit_report(const ExperimentReport& rep, ReportFormat format);

// JSON with the wall-clock field removed, for determinism comparisons.
std::string comparable_json(const ExperimentReport& rep);

}  // namespace jensenlab
