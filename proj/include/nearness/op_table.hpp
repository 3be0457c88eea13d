#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearness/errors.hpp"
#include "nearness/object_set.hpp"

namespace nearness {

// Total binary operation on a universe. Row index is the left operand,
// matching how the operation tables of structure documents read.
struct OpTable {
    std::string name;  // "+" or "·"
    std::size_t n = 0;
    std::vector<std::uint8_t> cells;  // n*n, row-major

    std::size_t at(std::size_t lhs, std::size_t rhs) const { return cells[lhs * n + rhs]; }

    static OpTable from_matrix(std::string name, std::size_t n,
                               const std::vector<std::vector<std::size_t>>& rows) {
        if (rows.size() != n) {
            throw InputError("operation '" + name + "': expected " + std::to_string(n) + " rows");
        }
        OpTable t;
        t.name = std::move(name);
        t.n = n;
        t.cells.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) {
                throw InputError("operation '" + t.name + "': ragged row");
            }
            for (std::size_t v : row) {
                if (v >= n) throw InputError("operation '" + t.name + "': entry out of range");
                t.cells.push_back(static_cast<std::uint8_t>(v));
            }
        }
        return t;
    }
};

// A carrier subset together with the ambient operation tables; the unit
// submitted to the axiom checkers. mul may be absent for additive-only checks.
struct StructureCandidate {
    ObjectSet carrier;
    const OpTable* add = nullptr;
    const OpTable* mul = nullptr;
};

}  // namespace nearness
