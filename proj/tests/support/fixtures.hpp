#pragma once

#include <string>
#include <vector>

#include "nearness/feature_system.hpp"
#include "nearness/op_table.hpp"

// Shared test fixtures. The eight-object system and its two operation
// tables are transcribed here independently of data/example3.json; the
// document tests assert that both transcriptions agree.
namespace fixtures {

using nearness::FeatureSystem;
using nearness::ObjectSet;
using nearness::OpTable;
using nearness::ProbeFunction;
using nearness::Universe;

inline FeatureSystem example3_system() {
    FeatureSystem fs;
    fs.universe = Universe::from_ids({"o", "p", "r", "s", "t", "v", "w", "x"});
    fs.probes.push_back(ProbeFunction{
        "phi1",
        {"alpha4", "alpha2", "alpha1", "alpha2", "alpha1", "alpha3", "alpha4", "alpha3"}});
    fs.probes.push_back(ProbeFunction{
        "phi2", {"beta1", "beta3", "beta2", "beta3", "beta2", "beta3", "beta1", "beta3"}});
    fs.r = 1;
    return fs;
}

inline OpTable example3_add() {
    return OpTable::from_matrix("+", 8,
                                {{0, 1, 2, 3, 4, 5, 6, 7},
                                 {1, 2, 3, 4, 5, 6, 7, 0},
                                 {2, 3, 4, 5, 6, 7, 0, 1},
                                 {3, 4, 5, 6, 7, 0, 1, 2},
                                 {4, 5, 6, 7, 0, 1, 2, 3},
                                 {5, 6, 7, 1, 1, 2, 3, 4},
                                 {6, 7, 0, 1, 2, 3, 4, 5},
                                 {7, 0, 1, 2, 3, 4, 5, 6}});
}

inline OpTable example3_mul() {
    return OpTable::from_matrix("·", 8,
                                {{0, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 1, 2, 3, 4, 5, 6, 7},
                                 {0, 2, 4, 6, 0, 2, 4, 6},
                                 {0, 3, 6, 1, 4, 0, 2, 5},
                                 {0, 4, 0, 4, 0, 4, 0, 4},
                                 {0, 5, 2, 7, 4, 1, 6, 3},
                                 {0, 6, 4, 2, 0, 6, 4, 2},
                                 {0, 7, 6, 5, 4, 3, 2, 1}});
}

inline ObjectSet named(const Universe& u, const std::vector<std::string>& ids) {
    ObjectSet s;
    for (const auto& id : ids) s.insert(u.require(id));
    return s;
}

// Z_k with one all-distinct probe (discrete partition) unless indiscrete.
inline FeatureSystem zmod_system(std::size_t k, bool indiscrete = false) {
    FeatureSystem fs;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < k; ++i) ids.push_back("z" + std::to_string(i));
    fs.universe = Universe::from_ids(ids);
    ProbeFunction probe;
    probe.name = "f";
    for (std::size_t i = 0; i < k; ++i) {
        probe.values.push_back(indiscrete ? "same" : "a" + std::to_string(i));
    }
    fs.probes.push_back(std::move(probe));
    fs.r = 1;
    return fs;
}

inline OpTable zmod_add(std::size_t k) {
    std::vector<std::vector<std::size_t>> rows(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = (i + j) % k;
    }
    return OpTable::from_matrix("+", k, rows);
}

inline OpTable zmod_mul(std::size_t k) {
    std::vector<std::vector<std::size_t>> rows(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = (i * j) % k;
    }
    return OpTable::from_matrix("·", k, rows);
}

}  // namespace fixtures
