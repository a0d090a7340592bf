#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace kp2 {

// Tabular experiment output: a CSV with a declared header (floats at 17
// significant digits, so re-parsing reproduces every bit), a JSON-lines
// mirror with identical values, and a small plot script referencing the
// CSV columns.
using CellValue = std::variant<double, std::int64_t, std::string>;
using ReportRow = std::vector<CellValue>;

// destination_stem + {.csv, .jsonl, _plot.py}. Rows must match the schema
// width; mismatches throw std::invalid_argument.
void emit_report(const std::vector<ReportRow>& rows, const std::vector<std::string>& schema,
                 const std::string& destination_stem);

std::string format_double_17(double v);

// Minimal CSV reader (quotes honored) for round-trip checks and the
// decompose pipeline.
std::vector<std::vector<std::string>> parse_csv(const std::string& path);

}  // namespace kp2
