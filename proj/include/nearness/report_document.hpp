#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nearness/report.hpp"

namespace nearness::io {

// A documented discrepancy: the source material records one value, the
// formal definitions compute another.
struct Deviation {
    std::string what;
    nlohmann::json expected;
    nlohmann::json computed;
    std::string note;
};

struct ReportDocument {
    std::string command;  // echo of the invocation
    std::string input;    // document path(s)
    AxiomReport report;
    nlohmann::json sets = nlohmann::json::object();
    nlohmann::json tables = nlohmann::json::object();
    std::vector<Deviation> deviations;
    nlohmann::json extra = nlohmann::json::object();

    // 0 when every requested verdict passes (and no anomaly), 1 otherwise.
    int exit_code() const { return report.passed() ? 0 : 1; }
};

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_document_from_json(const nlohmann::json& j);

std::string render_text(const ReportDocument& doc);
std::string render(const ReportDocument& doc, const std::string& format);  // "text" | "json"

// Helper for grid tables rendered in the row/column layout of the source
// tables: {"corner": ..., "headers": [...], "rows": [{"label":..., "cells":[...]}]}.
nlohmann::json grid_table(const std::string& corner, const std::vector<std::string>& headers,
                          const std::vector<std::pair<std::string, std::vector<std::string>>>& rows);

}  // namespace nearness::io
