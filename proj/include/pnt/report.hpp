#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pnt {

// A named, ordered table of numeric rows.  Row order is deterministic for a
// given parameter set; every row has one cell per column.  Cells keep their
// integer-ness so integers render without a fractional part.
struct ExperimentReport {
    using Cell = std::variant<int64_t, double>;

    std::string name;
    std::string note;  // one-line description, emitted as a comment
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class ReportFormat { csv, json };

// Locale-independent rendering: '.' decimal point, '\n' newlines, reals at 12
// significant digits.
std::string format_cell(const ExperimentReport::Cell& cell);
std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);

// Writes to the path, or to stdout when the path is empty.  I/O failures
// throw std::runtime_error.
void write_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

}  // namespace pnt
