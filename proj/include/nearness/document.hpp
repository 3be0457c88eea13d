#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "nearness/feature_system.hpp"
#include "nearness/op_table.hpp"

namespace nearness::io {

// A parsed and validated structure document. Operation tables are stored
// with normalized keys "+" and "*"; sub-structure tables from the source
// material live in `expected_tables` and are validated against the
// universe-level operations at parse time.
struct StructureDocument {
    std::shared_ptr<const NearnessSpace> space;
    std::map<std::string, OpTable> operations;
    std::map<std::string, ObjectSet> subsets;
    std::map<std::string, std::map<std::string, std::string>> maps;
    nlohmann::json meta = nlohmann::json::object();
    std::string source;

    const Universe& universe() const { return space->universe(); }

    const OpTable* op(const std::string& key) const;
    const OpTable& require_op(const std::string& key) const;
    ObjectSet require_subset(const std::string& name) const;
    const std::map<std::string, std::string>& require_map(const std::string& name) const;

    // Carrier plus whatever operation tables the document provides.
    StructureCandidate candidate(const std::string& carrier_name) const;
};

StructureDocument parse_document(const std::string& text, std::string source = "<string>");

// Reads a file, or stdin when the path is "-".
StructureDocument load_document(const std::string& path);

}  // namespace nearness::io
