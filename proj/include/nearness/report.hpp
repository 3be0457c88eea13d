#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace nearness {

enum class Verdict { pass, fail, not_applicable };

std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

// A violating tuple, tagged with the axiom and the condition that failed
// ("equality" vs "membership"), so both readings of "holds in N_r(B)^*X"
// stay auditable.
struct Counterexample {
    std::string axiom;
    std::string kind;
    std::vector<std::string> tuple;
    std::string lhs;
    std::string rhs;
    std::string note;
};

// A condition that contradicts a theorem rather than an axiom
// (e.g. two distinct near identities).
struct Anomaly {
    std::string kind;
    std::string detail;
};

struct AxiomReport {
    std::map<std::string, Verdict> verdicts;
    std::vector<std::string> required;  // axiom ids that decide passed()
    nlohmann::json witnesses = nlohmann::json::object();
    std::vector<Counterexample> counterexamples;
    std::vector<Anomaly> anomalies;
    nlohmann::json details = nlohmann::json::object();

    bool verdict_is(const std::string& axiom, Verdict v) const;
    Verdict verdict(const std::string& axiom) const;

    // All required verdicts pass and no anomaly was flagged.
    bool passed() const;

    void set(const std::string& axiom, Verdict v, bool is_required = false);

    // Counterexamples are capped per axiom; the canonical enumeration order
    // puts the smallest violating tuple first.
    void add_counterexample(Counterexample ce, std::size_t cap = 64);

    // Flattens a sub-report under "<prefix>." without touching required.
    void absorb(const std::string& prefix, const AxiomReport& sub);
};

nlohmann::json to_json(const Counterexample& ce);
Counterexample counterexample_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AxiomReport& rep);
AxiomReport axiom_report_from_json(const nlohmann::json& j);

}  // namespace nearness
