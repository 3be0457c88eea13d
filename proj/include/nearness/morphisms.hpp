#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearness/quotient.hpp"
#include "nearness/structures.hpp"

namespace nearness::morphisms {

// Explicit finite mapping between two universes; entries[x] is the image of
// object x of the from-universe, -1 when undefined.
struct MappingTable {
    ObjectSet domain;    // = N*(R1)
    ObjectSet codomain;  // = N*(R2)
    std::vector<int> entries;

    bool defined(std::size_t x) const {
        return x < entries.size() && entries[x] >= 0;
    }
    std::size_t at(std::size_t x) const;
};

struct HomEnv {
    structures::Context from;
    structures::Context to;
};

HomEnv make_env(const NearnessSpace& s1, const StructureCandidate& r1, const NearnessSpace& s2,
                const StructureCandidate& r2);

// Throws InputError on a domain gap or an image outside the codomain.
void validate_mapping(const MappingTable& m, const HomEnv& env);

// Preservation of both operations on carrier pairs; strict mode extends to
// all upper-approximation pairs whose operation results stay in the domain.
AxiomReport check_nearness_hom(const MappingTable& m, const HomEnv& env, bool strict = false);

// {x in R1 | m(x) = 0_R2}; throws StructuralError when R2 has no additive
// near identity.
ObjectSet kernel(const MappingTable& m, const HomEnv& env);

AxiomReport check_hom_properties(const MappingTable& m, const HomEnv& env);

AxiomReport check_image_subring(const NearnessSpace& s1, const NearnessSpace& s2,
                                const MappingTable& m, ObjectSet sub,
                                const StructureCandidate& r1, const StructureCandidate& r2);

AxiomReport check_kernel_ideal(const NearnessSpace& s1, const MappingTable& m,
                               const StructureCandidate& r1, const HomEnv& env);

struct NaturalHom {
    MappingTable map;  // x -> x+S, indices shared with the coset universe
    quotient::QuotientRing quotient;
    AxiomReport hom;
};

NaturalHom natural_hom(const NearnessSpace& space, const StructureCandidate& ambient,
                       ObjectSet sub, const std::string& sub_label = "S");

AxiomReport check_restricted_hom(const MappingTable& m, ObjectSet sub, const HomEnv& env);

struct FirstIsoResult {
    AxiomReport report;
    ObjectSet kernel_set;
    ObjectSet image;
    std::optional<quotient::QuotientRing> quotient;
    std::vector<int> eta;  // indexed by coset representative, -1 outside the domain
    std::optional<std::size_t> image_identity;
};

// The restricted first isomorphism check: R1/wKerχ ≃_rn χ(R1).
FirstIsoResult first_iso_check(const NearnessSpace& s1, const NearnessSpace& s2,
                               const MappingTable& chi, const StructureCandidate& r1,
                               const StructureCandidate& r2);

}  // namespace nearness::morphisms
