#include "pnt/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pnt {

std::string format_cell(const ExperimentReport::Cell& cell) {
    char buf[40];
    if (std::holds_alternative<int64_t>(cell)) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<int64_t>(cell));
        return std::string(buf, ptr);
    }
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(cell),
                                   std::chars_format::general, 12);
    return std::string(buf, ptr);
}

std::string to_csv(const ExperimentReport& report) {
    std::string out;
    out += "# experiment: " + report.name + "\n";
    if (!report.note.empty()) out += "# " + report.note + "\n";
    for (const auto& [k, v] : report.params) out += "# " + k + " = " + v + "\n";
    for (size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out += ',';
        out += report.columns[i];
    }
    out += '\n';
    for (const auto& row : report.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["experiment"] = report.name;
    if (!report.note.empty()) j["note"] = report.note;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["columns"] = report.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<int64_t>(cell)) {
                r.push_back(std::get<int64_t>(cell));
            } else {
                r.push_back(std::get<double>(cell));
            }
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
    const std::string payload = format == ReportFormat::csv ? to_csv(report) : to_json(report);
    if (path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << payload;
    out.flush();
    if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

}  // namespace pnt
