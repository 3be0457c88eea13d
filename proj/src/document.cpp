#include "nearness/document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "nearness/errors.hpp"

namespace nearness::io {

namespace {

std::string normalize_op_key(const std::string& key) {
    if (key == "+") return "+";
    if (key == "*" || key == "·" || key == ".") return "*";
    throw InputError("operations." + key + ": operation name must be \"+\" or \"*\"/\"·\"");
}

const nlohmann::json& expect(const nlohmann::json& j, const std::string& key,
                             nlohmann::json::value_t type, const std::string& what) {
    if (!j.contains(key)) throw InputError(key + ": missing " + what);
    const auto& v = j.at(key);
    const bool numeric_ok = type == nlohmann::json::value_t::number_unsigned &&
                            v.is_number_integer();
    if (v.type() != type && !numeric_ok) throw InputError(key + ": expected " + what);
    return v;
}

}  // namespace

const OpTable* StructureDocument::op(const std::string& key) const {
    auto it = operations.find(key);
    return it == operations.end() ? nullptr : &it->second;
}

const OpTable& StructureDocument::require_op(const std::string& key) const {
    const OpTable* t = op(key);
    if (t == nullptr) {
        throw InputError("document '" + source + "' has no \"" + key + "\" operation table");
    }
    return *t;
}

ObjectSet StructureDocument::require_subset(const std::string& name) const {
    auto it = subsets.find(name);
    if (it == subsets.end()) {
        throw InputError("unknown subset '" + name + "' in document '" + source + "'");
    }
    return it->second;
}

const std::map<std::string, std::string>& StructureDocument::require_map(
    const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) {
        throw InputError("unknown map '" + name + "' in document '" + source + "'");
    }
    return it->second;
}

StructureCandidate StructureDocument::candidate(const std::string& carrier_name) const {
    StructureCandidate c;
    c.carrier = require_subset(carrier_name);
    c.add = op("+");
    c.mul = op("*");
    return c;
}

StructureDocument parse_document(const std::string& text, std::string source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw InputError("document root must be a JSON object");

    static const std::vector<std::string> known = {"objects", "features",        "r",   "operations",
                                                   "subsets", "expected_tables", "maps", "meta"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw InputError(key + ": unknown document field");
        }
    }

    StructureDocument doc;
    doc.source = std::move(source);

    const auto& objects = expect(j, "objects", nlohmann::json::value_t::array, "object id list");
    if (objects.empty()) throw InputError("objects: must be nonempty");
    std::vector<std::string> ids;
    for (const auto& o : objects) {
        if (!o.is_string()) throw InputError("objects: ids must be strings");
        ids.push_back(o.get<std::string>());
    }
    Universe universe = Universe::from_ids(ids);
    const std::size_t n = universe.size();

    FeatureSystem fs;
    fs.universe = universe;
    const auto& features = expect(j, "features", nlohmann::json::value_t::object, "feature table");
    if (features.empty()) throw InputError("features: at least one probe function is required");
    for (const auto& [probe_name, values] : features.items()) {
        if (!values.is_object()) {
            throw InputError("features." + probe_name + ": expected an object mapping");
        }
        ProbeFunction probe;
        probe.name = probe_name;
        probe.values.resize(n);
        std::vector<bool> seen(n, false);
        for (const auto& [obj, value] : values.items()) {
            const std::size_t i = universe.index.count(obj)
                                      ? universe.index.at(obj)
                                      : throw InputError("features." + probe_name + "." + obj +
                                                         ": unknown object id");
            if (!value.is_string()) {
                throw InputError("features." + probe_name + "." + obj + ": value must be a string");
            }
            probe.values[i] = value.get<std::string>();
            seen[i] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!seen[i]) {
                throw InputError("features." + probe_name + ": no value for object '" +
                                 universe.label(i) + "'");
            }
        }
        fs.probes.push_back(std::move(probe));
    }
    const auto& r = expect(j, "r", nlohmann::json::value_t::number_unsigned, "positive integer r");
    const long long rv = r.get<long long>();
    if (rv < 1 || static_cast<std::size_t>(rv) > fs.probes.size()) {
        throw InputError("r: must satisfy 1 <= r <= " + std::to_string(fs.probes.size()));
    }
    fs.r = static_cast<std::size_t>(rv);
    doc.space = std::make_shared<NearnessSpace>(std::move(fs));

    if (j.contains("operations")) {
        const auto& ops = expect(j, "operations", nlohmann::json::value_t::object, "operations");
        for (const auto& [raw_key, matrix] : ops.items()) {
            const std::string key = normalize_op_key(raw_key);
            if (!matrix.is_array() || matrix.size() != n) {
                throw InputError("operations." + raw_key + ": expected a " + std::to_string(n) +
                                 "x" + std::to_string(n) + " matrix");
            }
            std::vector<std::vector<std::size_t>> rows;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& row = matrix.at(i);
                if (!row.is_array() || row.size() != n) {
                    throw InputError("operations." + raw_key + "[" + std::to_string(i) +
                                     "]: expected a row of " + std::to_string(n) + " object ids");
                }
                std::vector<std::size_t> out;
                for (const auto& cell : row) {
                    if (!cell.is_string()) {
                        throw InputError("operations." + raw_key + ": entries must be object ids");
                    }
                    out.push_back(universe.require(cell.get<std::string>()));
                }
                rows.push_back(std::move(out));
            }
            const std::string display = key == "+" ? "+" : "·";
            doc.operations.emplace(key, OpTable::from_matrix(display, n, rows));
        }
    }

    if (j.contains("subsets")) {
        const auto& subsets = expect(j, "subsets", nlohmann::json::value_t::object, "subsets");
        for (const auto& [name, members] : subsets.items()) {
            if (!members.is_array()) {
                throw InputError("subsets." + name + ": expected a list of object ids");
            }
            ObjectSet s;
            for (const auto& m : members) {
                if (!m.is_string()) throw InputError("subsets." + name + ": ids must be strings");
                s.insert(universe.require(m.get<std::string>()));
            }
            doc.subsets.emplace(name, s);
        }
    }

    if (j.contains("maps")) {
        const auto& maps = expect(j, "maps", nlohmann::json::value_t::object, "maps");
        for (const auto& [name, table] : maps.items()) {
            if (!table.is_object()) {
                throw InputError("maps." + name + ": expected an object-id mapping");
            }
            std::map<std::string, std::string> entries;
            for (const auto& [from, to] : table.items()) {
                universe.require(from);  // keys belong to this document
                if (!to.is_string()) throw InputError("maps." + name + "." + from +
                                                      ": image must be an object id string");
                entries.emplace(from, to.get<std::string>());
            }
            doc.maps.emplace(name, std::move(entries));
        }
    }

    if (j.contains("expected_tables")) {
        const auto& tables =
            expect(j, "expected_tables", nlohmann::json::value_t::object, "expected tables");
        for (const auto& [name, entry] : tables.items()) {
            const std::string path = "expected_tables." + name;
            if (!entry.is_object()) throw InputError(path + ": expected an object");
            const std::string op_key = normalize_op_key(entry.value("op", ""));
            const OpTable& op = doc.require_op(op_key);
            const std::string carrier_name = entry.value("carrier", "");
            auto cit = doc.subsets.find(carrier_name);
            if (cit == doc.subsets.end()) {
                throw InputError(path + ".carrier: unknown subset '" + carrier_name + "'");
            }
            const auto members = cit->second.indices();
            const auto& table = entry.at("table");
            if (!table.is_array() || table.size() != members.size()) {
                throw InputError(path + ".table: expected " + std::to_string(members.size()) +
                                 " rows");
            }
            for (std::size_t i = 0; i < members.size(); ++i) {
                const auto& row = table.at(i);
                if (!row.is_array() || row.size() != members.size()) {
                    throw InputError(path + ".table: ragged row " + std::to_string(i));
                }
                for (std::size_t k = 0; k < members.size(); ++k) {
                    const std::size_t given = universe.require(row.at(k).get<std::string>());
                    const std::size_t derived = op.at(members[i], members[k]);
                    if (given != derived) {
                        throw InputError(path + ".table[" + std::to_string(i) + "][" +
                                         std::to_string(k) + "]: entry '" +
                                         universe.label(given) +
                                         "' disagrees with the universe-level table ('" +
                                         universe.label(derived) + "')");
                    }
                }
            }
        }
    }

    doc.meta = j.value("meta", nlohmann::json::object());
    return doc;
}

StructureDocument load_document(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return parse_document(buf.str(), "<stdin>");
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open document '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

}  // namespace nearness::io
