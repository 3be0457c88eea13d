#include "nearness/report.hpp"

#include <algorithm>

#include "nearness/errors.hpp"

namespace nearness {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "fail";
}

Verdict verdict_from_name(std::string_view name) {
    if (name == "pass") return Verdict::pass;
    if (name == "fail") return Verdict::fail;
    if (name == "not-applicable") return Verdict::not_applicable;
    throw InputError("unknown verdict '" + std::string(name) + "'");
}

bool AxiomReport::verdict_is(const std::string& axiom, Verdict v) const {
    auto it = verdicts.find(axiom);
    return it != verdicts.end() && it->second == v;
}

Verdict AxiomReport::verdict(const std::string& axiom) const {
    auto it = verdicts.find(axiom);
    if (it == verdicts.end()) throw InputError("report has no verdict for '" + axiom + "'");
    return it->second;
}

bool AxiomReport::passed() const {
    if (!anomalies.empty()) return false;
    return std::all_of(required.begin(), required.end(),
                       [&](const std::string& a) { return verdict_is(a, Verdict::pass); });
}

void AxiomReport::set(const std::string& axiom, Verdict v, bool is_required) {
    verdicts[axiom] = v;
    if (is_required) required.push_back(axiom);
}

void AxiomReport::add_counterexample(Counterexample ce, std::size_t cap) {
    std::size_t same_axiom = 0;
    for (const auto& existing : counterexamples) {
        if (existing.axiom == ce.axiom) ++same_axiom;
    }
    if (same_axiom < cap) counterexamples.push_back(std::move(ce));
}

void AxiomReport::absorb(const std::string& prefix, const AxiomReport& sub) {
    for (const auto& [axiom, v] : sub.verdicts) verdicts[prefix + "." + axiom] = v;
    for (Counterexample ce : sub.counterexamples) {
        ce.axiom = prefix + "." + ce.axiom;
        add_counterexample(std::move(ce));
    }
    for (const auto& a : sub.anomalies) anomalies.push_back(a);
    if (!sub.witnesses.empty()) witnesses[prefix] = sub.witnesses;
    if (!sub.details.empty()) details[prefix] = sub.details;
}

nlohmann::json to_json(const Counterexample& ce) {
    nlohmann::json j = nlohmann::json::object();
    j["axiom"] = ce.axiom;
    j["kind"] = ce.kind;
    j["tuple"] = ce.tuple;
    if (!ce.lhs.empty()) j["lhs"] = ce.lhs;
    if (!ce.rhs.empty()) j["rhs"] = ce.rhs;
    if (!ce.note.empty()) j["note"] = ce.note;
    return j;
}

Counterexample counterexample_from_json(const nlohmann::json& j) {
    Counterexample ce;
    ce.axiom = j.value("axiom", "");
    ce.kind = j.value("kind", "");
    if (j.contains("tuple")) ce.tuple = j.at("tuple").get<std::vector<std::string>>();
    ce.lhs = j.value("lhs", "");
    ce.rhs = j.value("rhs", "");
    ce.note = j.value("note", "");
    return ce;
}

nlohmann::json to_json(const AxiomReport& rep) {
    nlohmann::json j = nlohmann::json::object();
    nlohmann::json verdicts = nlohmann::json::object();
    for (const auto& [axiom, v] : rep.verdicts) verdicts[axiom] = std::string(verdict_name(v));
    j["verdicts"] = verdicts;
    j["required"] = rep.required;
    j["witnesses"] = rep.witnesses;
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& ce : rep.counterexamples) ces.push_back(to_json(ce));
    j["counterexamples"] = ces;
    nlohmann::json anomalies = nlohmann::json::array();
    for (const auto& a : rep.anomalies) {
        anomalies.push_back(nlohmann::json{{"kind", a.kind}, {"detail", a.detail}});
    }
    j["anomalies"] = anomalies;
    j["details"] = rep.details;
    j["pass"] = rep.passed();
    return j;
}

AxiomReport axiom_report_from_json(const nlohmann::json& j) {
    AxiomReport rep;
    const nlohmann::json verdicts = j.value("verdicts", nlohmann::json::object());
    for (const auto& [axiom, v] : verdicts.items()) {
        rep.verdicts[axiom] = verdict_from_name(v.get<std::string>());
    }
    rep.required = j.value("required", std::vector<std::string>{});
    rep.witnesses = j.value("witnesses", nlohmann::json::object());
    for (const auto& c : j.value("counterexamples", nlohmann::json::array())) {
        rep.counterexamples.push_back(counterexample_from_json(c));
    }
    for (const auto& a : j.value("anomalies", nlohmann::json::array())) {
        rep.anomalies.push_back(Anomaly{a.value("kind", ""), a.value("detail", "")});
    }
    rep.details = j.value("details", nlohmann::json::object());
    return rep;
}

}  // namespace nearness
