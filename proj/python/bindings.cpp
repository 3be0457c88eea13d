// Python bindings for the nearness workbench: document loading, the
// approximation/verification commands, and the small-structure search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdlib>

#include "nearness/commands.hpp"
#include "nearness/descriptive.hpp"
#include "nearness/errors.hpp"

namespace py = pybind11;
using nearness::io::ReportDocument;
using nearness::io::StructureDocument;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = json_to_py(value);
            }
            return out;
        }
        default: return py::none();
    }
}

py::dict report_to_py(const ReportDocument& rep) {
    py::dict out = json_to_py(nearness::io::to_json(rep)).cast<py::dict>();
    out["exit_code"] = rep.exit_code();
    return out;
}

nearness::ObjectSet ids_to_set(const StructureDocument& doc,
                               const std::vector<std::string>& ids) {
    return doc.universe().set_of(ids);
}

std::size_t powerset_bound_from_env() {
    const char* v = std::getenv("NEARNESS_POWERSET_MAX");
    if (v == nullptr) return nearness::descriptive::kDefaultPowersetBound;
    const long parsed = std::atol(v);
    if (parsed < 1) throw nearness::InputError("NEARNESS_POWERSET_MAX must be positive");
    return static_cast<std::size_t>(parsed);
}

}  // namespace

PYBIND11_MODULE(_nearness, m) {
    m.doc() = "nearness approximation spaces and algebraic structure checks";

    py::register_exception<nearness::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<nearness::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<nearness::StructuralError>(m, "StructuralError", PyExc_RuntimeError);
    py::register_exception<nearness::PreconditionError>(m, "PreconditionError",
                                                        PyExc_RuntimeError);

    py::class_<StructureDocument>(m, "Document")
        .def_property_readonly("objects",
                               [](const StructureDocument& d) { return d.universe().ids; })
        .def_property_readonly("source", [](const StructureDocument& d) { return d.source; })
        .def("subset",
             [](const StructureDocument& d, const std::string& name) {
                 return d.universe().labels(d.require_subset(name));
             })
        .def("__repr__", [](const StructureDocument& d) {
            return "<nearness.Document '" + d.source + "', " +
                   std::to_string(d.universe().size()) + " objects>";
        });

    m.def("load_document", &nearness::io::load_document, py::arg("path"));
    m.def("parse_document", &nearness::io::parse_document, py::arg("text"),
          py::arg("source") = "<string>");

    m.def(
        "describe",
        [](const StructureDocument& doc, const std::string& id,
           const std::vector<std::string>& probes) {
            std::vector<std::size_t> idx;
            for (const auto& p : probes) idx.push_back(doc.space->probe_index(p));
            return doc.space->describe(doc.universe().require(id), idx);
        },
        py::arg("doc"), py::arg("object"), py::arg("probes"));
    m.def(
        "upper_approx",
        [](const StructureDocument& doc, const std::vector<std::string>& ids) {
            return doc.universe().labels(doc.space->upper_approx(ids_to_set(doc, ids)));
        },
        py::arg("doc"), py::arg("ids"));
    m.def(
        "lower_approx",
        [](const StructureDocument& doc, const std::vector<std::string>& ids) {
            return doc.universe().labels(doc.space->lower_approx(ids_to_set(doc, ids)));
        },
        py::arg("doc"), py::arg("ids"));
    m.def(
        "boundary",
        [](const StructureDocument& doc, const std::vector<std::string>& ids) {
            return doc.universe().labels(doc.space->boundary(ids_to_set(doc, ids)));
        },
        py::arg("doc"), py::arg("ids"));
    m.def(
        "overlap",
        [](const StructureDocument& doc, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            const auto v = doc.space->overlap(ids_to_set(doc, a), ids_to_set(doc, b));
            return py::make_tuple(v.num, v.den);
        },
        py::arg("doc"), py::arg("a"), py::arg("b"));
    m.def(
        "set_description",
        [](const StructureDocument& doc, const std::vector<std::string>& ids) {
            const auto descs =
                nearness::descriptive::set_description(*doc.space, ids_to_set(doc, ids));
            return std::vector<std::vector<std::string>>(descs.begin(), descs.end());
        },
        py::arg("doc"), py::arg("ids"));
    m.def(
        "descriptively_near",
        [](const StructureDocument& doc, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            return nearness::descriptive::is_descriptively_near(*doc.space, ids_to_set(doc, a),
                                                                ids_to_set(doc, b));
        },
        py::arg("doc"), py::arg("a"), py::arg("b"));

    m.def(
        "approx",
        [](const StructureDocument& doc, const std::string& set_name) {
            return report_to_py(nearness::io::cmd_approx(doc, set_name));
        },
        py::arg("doc"), py::arg("set"));
    m.def(
        "verify_ring",
        [](const StructureDocument& doc, const std::string& carrier) {
            return report_to_py(nearness::io::cmd_verify_ring(doc, carrier));
        },
        py::arg("doc"), py::arg("carrier"));
    m.def(
        "verify_subring",
        [](const StructureDocument& doc, const std::string& carrier, const std::string& sub) {
            return report_to_py(nearness::io::cmd_verify_subring(doc, carrier, sub));
        },
        py::arg("doc"), py::arg("carrier"), py::arg("sub"));
    m.def(
        "verify_ideal",
        [](const StructureDocument& doc, const std::string& carrier, const std::string& sub,
           const std::string& side) {
            const auto s = side == "left"    ? nearness::structures::Side::left
                           : side == "right" ? nearness::structures::Side::right
                                             : nearness::structures::Side::two_sided;
            return report_to_py(nearness::io::cmd_verify_ideal(doc, carrier, sub, s));
        },
        py::arg("doc"), py::arg("carrier"), py::arg("sub"), py::arg("side") = "both");
    m.def(
        "cosets",
        [](const StructureDocument& doc, const std::string& carrier, const std::string& sub,
           bool extended) {
            return report_to_py(nearness::io::cmd_cosets(doc, carrier, sub, extended));
        },
        py::arg("doc"), py::arg("carrier"), py::arg("sub"), py::arg("extended") = false);
    m.def(
        "quotient",
        [](const StructureDocument& doc, const std::string& carrier, const std::string& sub,
           bool powerset) {
            return report_to_py(nearness::io::cmd_quotient(doc, carrier, sub, powerset,
                                                           powerset_bound_from_env()));
        },
        py::arg("doc"), py::arg("carrier"), py::arg("sub"), py::arg("powerset") = false);
    m.def(
        "verify_hom",
        [](const StructureDocument& from, const StructureDocument& to, const std::string& map,
           const std::string& carrier, const std::string& to_carrier, bool strict) {
            return report_to_py(
                nearness::io::cmd_verify_hom(from, to, map, carrier, to_carrier, strict));
        },
        py::arg("from_doc"), py::arg("to_doc"), py::arg("map"), py::arg("carrier"),
        py::arg("to_carrier"), py::arg("strict") = false);
    m.def(
        "iso_check",
        [](const StructureDocument& from, const StructureDocument& to, const std::string& map,
           const std::string& carrier, const std::string& to_carrier) {
            return report_to_py(nearness::io::cmd_iso_check(from, to, map, carrier, to_carrier));
        },
        py::arg("from_doc"), py::arg("to_doc"), py::arg("map"), py::arg("carrier"),
        py::arg("to_carrier"));
    m.def(
        "search",
        [](std::size_t size, std::uint64_t seed, bool exhaustive, std::size_t samples) {
            nearness::io::SearchOptions opts;
            opts.size = size;
            opts.seed = seed;
            opts.exhaustive = exhaustive;
            opts.samples = samples;
            return report_to_py(nearness::io::cmd_search(opts));
        },
        py::arg("size"), py::arg("seed") = 0, py::arg("exhaustive") = false,
        py::arg("samples") = 2000);
}
