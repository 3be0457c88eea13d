#include "nearness/report_document.hpp"

#include <sstream>

#include "nearness/errors.hpp"

namespace nearness::io {

nlohmann::json to_json(const ReportDocument& doc) {
    nlohmann::json j = nlohmann::json::object();
    j["command"] = doc.command;
    j["input"] = doc.input;
    j["report"] = to_json(doc.report);
    j["sets"] = doc.sets;
    j["tables"] = doc.tables;
    nlohmann::json devs = nlohmann::json::array();
    for (const auto& d : doc.deviations) {
        nlohmann::json e = nlohmann::json::object();
        e["what"] = d.what;
        e["expected"] = d.expected;
        e["computed"] = d.computed;
        if (!d.note.empty()) e["note"] = d.note;
        devs.push_back(e);
    }
    j["deviations"] = devs;
    j["extra"] = doc.extra;
    return j;
}

ReportDocument report_document_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    doc.command = j.value("command", "");
    doc.input = j.value("input", "");
    doc.report = axiom_report_from_json(j.value("report", nlohmann::json::object()));
    doc.sets = j.value("sets", nlohmann::json::object());
    doc.tables = j.value("tables", nlohmann::json::object());
    for (const auto& d : j.value("deviations", nlohmann::json::array())) {
        doc.deviations.push_back(Deviation{d.value("what", ""),
                                           d.value("expected", nlohmann::json()),
                                           d.value("computed", nlohmann::json()),
                                           d.value("note", "")});
    }
    doc.extra = j.value("extra", nlohmann::json::object());
    return doc;
}

nlohmann::json grid_table(const std::string& corner, const std::vector<std::string>& headers,
                          const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    nlohmann::json j = nlohmann::json::object();
    j["corner"] = corner;
    j["headers"] = headers;
    nlohmann::json out_rows = nlohmann::json::array();
    for (const auto& [label, cells] : rows) {
        out_rows.push_back(nlohmann::json{{"label", label}, {"cells", cells}});
    }
    j["rows"] = out_rows;
    return j;
}

namespace {

std::string set_text(const nlohmann::json& v) {
    if (v.is_array()) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += v.at(i).is_string() ? v.at(i).get<std::string>() : v.at(i).dump();
        }
        return out + "}";
    }
    return v.dump();
}

std::size_t codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xc0) != 0x80) ++n;
    }
    return n;
}

void render_grid(std::ostringstream& out, const std::string& name, const nlohmann::json& grid) {
    const auto headers = grid.value("headers", nlohmann::json::array());
    std::size_t width = codepoints(grid.value("corner", std::string()));
    for (const auto& h : headers) width = std::max(width, codepoints(h.get<std::string>()));
    for (const auto& row : grid.value("rows", nlohmann::json::array())) {
        width = std::max(width, codepoints(row.value("label", std::string())));
        for (const auto& c : row.value("cells", nlohmann::json::array())) {
            width = std::max(width, codepoints(c.get<std::string>()));
        }
    }
    auto pad = [&](const std::string& s) {
        const std::size_t len = codepoints(s);
        return s + std::string(width - std::min(width, len), ' ');
    };
    out << name << ":\n";
    out << "  " << pad(grid.value("corner", std::string())) << " |";
    for (const auto& h : headers) out << " " << pad(h.get<std::string>());
    out << "\n";
    out << "  " << std::string(width, '-') << "-+" << std::string((width + 1) * headers.size(), '-')
        << "\n";
    for (const auto& row : grid.value("rows", nlohmann::json::array())) {
        out << "  " << pad(row.value("label", std::string())) << " |";
        for (const auto& c : row.value("cells", nlohmann::json::array())) {
            out << " " << pad(c.get<std::string>());
        }
        out << "\n";
    }
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "command: " << doc.command << "\n";
    if (!doc.input.empty()) out << "input:   " << doc.input << "\n";

    if (doc.report.verdicts.empty()) {
        out << "no checks requested\n";
    } else {
        out << "verdicts:\n";
        for (const auto& [axiom, v] : doc.report.verdicts) {
            out << "  " << axiom << ": " << verdict_name(v) << "\n";
        }
        out << "result: " << (doc.report.passed() ? "pass" : "fail") << "\n";
    }

    if (!doc.report.witnesses.empty()) {
        out << "witnesses:\n";
        for (const auto& [key, v] : doc.report.witnesses.items()) {
            out << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
    if (!doc.report.counterexamples.empty()) {
        out << "counterexamples:\n";
        for (const auto& ce : doc.report.counterexamples) {
            out << "  " << ce.axiom << " (";
            for (std::size_t i = 0; i < ce.tuple.size(); ++i) {
                if (i) out << ", ";
                out << ce.tuple[i];
            }
            out << ") " << ce.kind;
            if (!ce.lhs.empty() && !ce.rhs.empty()) out << ": " << ce.lhs << " != " << ce.rhs;
            else if (!ce.lhs.empty()) out << ": " << ce.lhs;
            if (!ce.note.empty()) out << " [" << ce.note << "]";
            out << "\n";
        }
    }
    if (!doc.report.anomalies.empty()) {
        out << "anomalies:\n";
        for (const auto& a : doc.report.anomalies) out << "  " << a.kind << ": " << a.detail << "\n";
    }
    if (!doc.sets.empty()) {
        out << "sets:\n";
        for (const auto& [key, v] : doc.sets.items()) {
            if (v.is_object()) {
                out << "  " << key << ":\n";
                for (const auto& [k2, v2] : v.items()) out << "    " << k2 << " = " << set_text(v2) << "\n";
            } else {
                out << "  " << key << " = " << set_text(v) << "\n";
            }
        }
    }
    for (const auto& [name, grid] : doc.tables.items()) render_grid(out, name, grid);
    if (!doc.deviations.empty()) {
        out << "deviations:\n";
        for (const auto& d : doc.deviations) {
            out << "  " << d.what << ": document records " << set_text(d.expected) << ", computed "
                << set_text(d.computed);
            if (!d.note.empty()) out << " [" << d.note << "]";
            out << "\n";
        }
    }
    if (!doc.extra.empty()) {
        out << "extra:\n" << doc.extra.dump(2) << "\n";
    }
    return out.str();
}

std::string render(const ReportDocument& doc, const std::string& format) {
    if (format == "text") return render_text(doc);
    if (format == "json") return to_json(doc).dump(2) + "\n";
    throw InputError("unknown report format '" + format + "'");
}

}  // namespace nearness::io
