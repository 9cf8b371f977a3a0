#pragma once

#include <string>

#include "vimo/checkers.hpp"
#include "vimo/solvers.hpp"

namespace vimo {

enum class ReportFormat { Table, Records, Csv };

ReportFormat parse_format(const std::string& name);

/// Deterministic serialization. Records is one JSON object on a single line
/// (fixed key order, round-trips bit-exactly); Table is the human-readable
/// form; Csv carries the iteration trace (solve reports) or the witness
/// values (class reports).
std::string emit_report(const SolveReport& report, ReportFormat format);
std::string emit_report(const ClassReport& report, ReportFormat format);

SolveReport parse_solve_report(const std::string& records_line);
ClassReport parse_class_report(const std::string& records_line);

bool operator==(const SolveReport& a, const SolveReport& b);
bool operator==(const ClassReport& a, const ClassReport& b);

}  // namespace vimo
