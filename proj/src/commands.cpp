#include "nearness/commands.hpp"

#include <algorithm>

#include "nearness/descriptive.hpp"
#include "nearness/errors.hpp"
#include "nearness/morphisms.hpp"
#include "nearness/quotient.hpp"

namespace nearness::io {

namespace {

using structures::Side;

nlohmann::json sorted_tuple_list(std::set<ObjectDescription> descs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : descs) out.push_back(d);
    return out;
}

// Canonical form of a description-set block from meta.expected: a sorted,
// deduplicated list of value tuples.
nlohmann::json canonical_tuples(const nlohmann::json& tuples) {
    std::set<ObjectDescription> set;
    for (const auto& t : tuples) set.insert(t.get<ObjectDescription>());
    return sorted_tuple_list(std::move(set));
}

nlohmann::json canonical_id_list(const StructureDocument& doc, const nlohmann::json& ids) {
    ObjectSet s;
    for (const auto& id : ids) s.insert(doc.universe().require(id.get<std::string>()));
    return doc.universe().labels(s);
}

// Compares computed weak cosets against source-recorded member sets and
// description sets, emitting deviations for mismatches.
void collect_coset_deviations(const StructureDocument& doc, const std::string& carrier,
                              const std::string& sub, const quotient::CosetFamily& family,
                              bool with_descriptions, ReportDocument& out) {
    const auto& meta = doc.meta;
    if (!meta.contains("expected")) return;
    const auto& expected = meta.at("expected");
    const std::string key = carrier + "/" + sub;
    const Universe& u = doc.universe();

    if (expected.contains("cosets") && expected.at("cosets").contains(key)) {
        for (const auto& [rep, members] : expected.at("cosets").at(key).items()) {
            const std::size_t rep_idx = u.require(rep);
            if (!family.reps.contains(rep_idx)) continue;
            const nlohmann::json computed = u.labels(family.by_rep(rep_idx).members);
            const nlohmann::json recorded = canonical_id_list(doc, members);
            if (computed != recorded) {
                out.deviations.push_back({"coset " + rep + "+" + sub, recorded, computed,
                                          "member set recomputed from the weak coset formula"});
            }
        }
    }
    if (with_descriptions && expected.contains("coset_descriptions") &&
        expected.at("coset_descriptions").contains(key)) {
        for (const auto& [rep, tuples] : expected.at("coset_descriptions").at(key).items()) {
            const std::size_t rep_idx = u.require(rep);
            if (!family.reps.contains(rep_idx)) continue;
            const nlohmann::json computed = sorted_tuple_list(
                descriptive::set_description(*doc.space, family.by_rep(rep_idx).members));
            const nlohmann::json recorded = canonical_tuples(tuples);
            if (computed != recorded) {
                out.deviations.push_back({"Q(" + rep + "+" + sub + ")", recorded, computed,
                                          "description set recomputed from the feature table"});
            }
        }
    }
}

morphisms::MappingTable build_mapping(const StructureDocument& from, const StructureDocument& to,
                                      const std::string& map_name,
                                      const morphisms::HomEnv& env) {
    const auto& raw = from.require_map(map_name);
    morphisms::MappingTable m;
    m.entries.assign(from.universe().size(), -1);
    for (const auto& [k, v] : raw) {
        const std::size_t x = from.universe().require(k);
        const std::size_t y = to.universe().require(v);
        m.entries[x] = static_cast<int>(y);
        m.domain.insert(x);
    }
    m.codomain = env.to.upper;
    return m;
}

nlohmann::json coset_listing(const Universe& u, const quotient::CosetFamily& fam,
                             const std::string& sub_label) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& c : fam.cosets) {
        out[u.label(c.rep) + "+" + sub_label] = u.labels(c.members);
    }
    return out;
}

nlohmann::json quotient_grid(const quotient::QuotientRing& q, const OpTable& op) {
    std::vector<std::string> headers;
    q.base.reps.for_each([&](std::size_t r) { headers.push_back(q.coset_label(r)); });
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    q.base.reps.for_each([&](std::size_t a) {
        std::vector<std::string> cells;
        q.base.reps.for_each(
            [&](std::size_t b) { cells.push_back(q.coset_label(op.at(a, b))); });
        rows.emplace_back(q.coset_label(a), std::move(cells));
    });
    return grid_table(op.name, headers, rows);
}

}  // namespace

ReportDocument cmd_approx(const StructureDocument& doc, const std::string& set_name) {
    ReportDocument out;
    out.command = "approx --set " + set_name;
    out.input = doc.source;
    const ObjectSet x = doc.require_subset(set_name);
    const NearnessSpace& space = *doc.space;
    const Universe& u = doc.universe();
    out.sets["set"] = u.labels(x);
    out.sets["lower"] = u.labels(space.lower_approx(x));
    out.sets["upper"] = u.labels(space.upper_approx(x));
    out.sets["boundary"] = u.labels(space.boundary(x));
    return out;
}

ReportDocument cmd_verify_ring(const StructureDocument& doc, const std::string& carrier) {
    ReportDocument out;
    out.command = "verify ring --carrier " + carrier;
    out.input = doc.source;
    StructureCandidate cand = doc.candidate(carrier);
    doc.require_op("+");
    doc.require_op("*");
    out.report = structures::check_nearness_ring(structures::make_context(*doc.space, cand));
    return out;
}

ReportDocument cmd_verify_subring(const StructureDocument& doc, const std::string& carrier,
                                  const std::string& sub) {
    ReportDocument out;
    out.command = "verify subring --carrier " + carrier + " --sub " + sub;
    out.input = doc.source;
    doc.require_op("+");
    doc.require_op("*");
    out.report = structures::check_subnearness_ring(*doc.space, doc.require_subset(sub),
                                                    doc.candidate(carrier));
    return out;
}

ReportDocument cmd_verify_ideal(const StructureDocument& doc, const std::string& carrier,
                                const std::string& sub, Side side) {
    ReportDocument out;
    const std::string side_name = side == Side::left    ? "left"
                                  : side == Side::right ? "right"
                                                        : "both";
    out.command = "verify ideal --carrier " + carrier + " --sub " + sub + " --side " + side_name;
    out.input = doc.source;
    doc.require_op("+");
    doc.require_op("*");
    out.report =
        structures::check_ideal(*doc.space, doc.require_subset(sub), doc.candidate(carrier), side);
    return out;
}

ReportDocument cmd_cosets(const StructureDocument& doc, const std::string& carrier,
                          const std::string& sub, bool extended) {
    ReportDocument out;
    out.command = "cosets --carrier " + carrier + " --sub " + sub + (extended ? " --extended" : "");
    out.input = doc.source;
    doc.require_op("+");
    const StructureCandidate cand = doc.candidate(carrier);
    const ObjectSet sub_set = doc.require_subset(sub);

    if (cand.mul != nullptr) {
        AxiomReport subring = structures::check_subnearness_ring(*doc.space, sub_set, cand);
        if (!subring.passed()) {
            out.report.details["warning"] =
                "'" + sub + "' is not a verified subnearness ring of '" + carrier + "'";
        }
    }

    const quotient::CosetFamily fam = quotient::coset_family(*doc.space, cand, sub_set, extended);
    out.sets["cosets"] = coset_listing(doc.universe(), fam, sub);

    // Cross-links between cosets sharing a member set.
    std::map<std::uint64_t, std::vector<std::string>> groups;
    for (const auto& c : fam.cosets) {
        groups[c.members.bits()].push_back(doc.universe().label(c.rep) + "+" + sub);
    }
    nlohmann::json dup = nlohmann::json::array();
    for (const auto& [bits, labels] : groups) {
        if (labels.size() > 1) dup.push_back(labels);
    }
    out.report.details["duplicate_member_sets"] = dup;

    collect_coset_deviations(doc, carrier, sub, fam, false, out);
    return out;
}

ReportDocument cmd_quotient(const StructureDocument& doc, const std::string& carrier,
                            const std::string& sub, bool powerset, std::size_t powerset_bound) {
    ReportDocument out;
    out.command = "quotient --carrier " + carrier + " --sub " + sub + (powerset ? " --powerset" : "");
    out.input = doc.source;
    doc.require_op("+");
    doc.require_op("*");
    const StructureCandidate cand = doc.candidate(carrier);
    const ObjectSet sub_set = doc.require_subset(sub);
    const NearnessSpace& space = *doc.space;

    AxiomReport subring = structures::check_subnearness_ring(space, sub_set, cand);
    if (!subring.passed()) {
        out.report.details["warning"] =
            "'" + sub + "' is not a verified subnearness ring of '" + carrier + "'";
    }

    AxiomReport hyp =
        quotient::check_quotient_hypothesis(space, cand, sub_set, sub, powerset, powerset_bound);
    if (!hyp.passed()) {
        out.report = std::move(hyp);
        return out;
    }

    quotient::QuotientRing q = quotient::build_quotient_ring(space, cand, sub_set, sub);
    out.report = q.ring;
    out.report.set("quotient-hypothesis", Verdict::pass, true);
    out.report.witnesses["pairings"] = hyp.witnesses["pairings"];
    out.sets["family"] = coset_listing(doc.universe(), q.base, sub);
    out.sets["extended_family"] = coset_listing(doc.universe(), q.extended, sub);
    nlohmann::json upper_labels = nlohmann::json::array();
    q.family_upper.for_each([&](std::size_t r) { upper_labels.push_back(q.coset_label(r)); });
    out.sets["family_upper"] = upper_labels;
    out.tables["sum"] = quotient_grid(q, q.sum);
    out.tables["product"] = quotient_grid(q, q.product);

    collect_coset_deviations(doc, carrier, sub, q.extended, true, out);
    return out;
}

ReportDocument cmd_verify_hom(const StructureDocument& from, const StructureDocument& to,
                              const std::string& map_name, const std::string& carrier,
                              const std::string& to_carrier, bool strict) {
    ReportDocument out;
    out.command = "verify hom --map " + map_name + " --carrier " + carrier + " --to-carrier " +
                  to_carrier;
    out.input = from.source + " -> " + to.source;
    from.require_op("+");
    from.require_op("*");
    to.require_op("+");
    to.require_op("*");
    morphisms::HomEnv env = morphisms::make_env(*from.space, from.candidate(carrier), *to.space,
                                                to.candidate(to_carrier));
    const morphisms::MappingTable m = build_mapping(from, to, map_name, env);
    out.report = morphisms::check_nearness_hom(m, env, strict);
    if (out.report.passed()) {
        AxiomReport props = morphisms::check_hom_properties(m, env);
        out.report.absorb("properties", props);
        out.sets["kernel"] = from.universe().labels(morphisms::kernel(m, env));
    }
    return out;
}

ReportDocument cmd_iso_check(const StructureDocument& from, const StructureDocument& to,
                             const std::string& map_name, const std::string& carrier,
                             const std::string& to_carrier) {
    ReportDocument out;
    out.command = "iso-check --map " + map_name + " --carrier " + carrier + " --to-carrier " +
                  to_carrier;
    out.input = from.source + " -> " + to.source;
    from.require_op("+");
    from.require_op("*");
    to.require_op("+");
    to.require_op("*");
    morphisms::HomEnv env = morphisms::make_env(*from.space, from.candidate(carrier), *to.space,
                                                to.candidate(to_carrier));
    const morphisms::MappingTable m = build_mapping(from, to, map_name, env);
    morphisms::FirstIsoResult res =
        morphisms::first_iso_check(*from.space, *to.space, m, from.candidate(carrier),
                                   to.candidate(to_carrier));
    out.report = res.report;
    out.sets["kernel"] = from.universe().labels(res.kernel_set);
    out.sets["image"] = to.universe().labels(res.image);
    if (res.quotient.has_value()) {
        out.sets["quotient_family"] = coset_listing(from.universe(), res.quotient->base, "Ker");
        out.tables["sum"] = quotient_grid(*res.quotient, res.quotient->sum);
        out.tables["product"] = quotient_grid(*res.quotient, res.quotient->product);
    }
    return out;
}

ReportDocument cmd_search(const SearchOptions& opts) {
    ReportDocument out;
    out.command = "search --size " + std::to_string(opts.size) + " --seed " +
                  std::to_string(opts.seed) + (opts.exhaustive ? " --exhaustive" : "");
    out.extra = search_structures(opts);
    return out;
}

}  // namespace nearness::io
