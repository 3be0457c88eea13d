#pragma once

#include <span>
#include <string>
#include <vector>

#include "nearness/descriptive.hpp"
#include "nearness/structures.hpp"

namespace nearness::quotient {

// x+S = {x+s | s in S, x+s in R} U {x}. Members are filtered against the
// carrier R even when the representative lies only in N*(R).
struct WeakCoset {
    std::size_t rep = 0;
    ObjectSet members;
};

WeakCoset weak_coset(const OpTable& add, std::size_t x, ObjectSet sub, ObjectSet carrier);

struct CosetFamily {
    std::vector<WeakCoset> cosets;  // representative order = canonical object order
    ObjectSet sub;
    ObjectSet reps;
    bool extended = false;

    const WeakCoset& by_rep(std::size_t rep) const;
};

// Representatives iterate R (extended = false) or N*(R) (extended = true).
CosetFamily coset_family(const NearnessSpace& space, const StructureCandidate& ambient,
                         ObjectSet sub, bool extended);

// (x+S) ⊕ (y+S) = (x+y)+S; throws ClosureError when x+y escapes N*(R).
WeakCoset coset_sum(const NearnessSpace& space, const StructureCandidate& ambient, ObjectSet sub,
                    const WeakCoset& a, const WeakCoset& b);
// (x+S) ⊙ (y+S) = (x·y)+S, with the member set still built additively.
WeakCoset coset_product(const NearnessSpace& space, const StructureCandidate& ambient,
                        ObjectSet sub, const WeakCoset& a, const WeakCoset& b);

// (N*(R))/~ ⊆ N*(R/~), where N*(R/~) collects the candidate cosets
// descriptively near some member of R/~. Candidates default to all weak
// cosets with representatives in O; the powerset of O is opt-in.
AxiomReport check_quotient_hypothesis(const NearnessSpace& space,
                                      const StructureCandidate& ambient, ObjectSet sub,
                                      const std::string& sub_label = "S",
                                      bool powerset_candidates = false,
                                      std::size_t powerset_bound = descriptive::kDefaultPowersetBound);

struct QuotientRing {
    CosetFamily base;                   // R/~
    CosetFamily extended;               // (N*(R))/~
    std::vector<WeakCoset> candidates;  // one coset per object of O
    ObjectSet family_upper;             // representatives of N*(R/~)
    Universe coset_universe;            // labels "x+S"
    OpTable sum;                        // representative-wise ⊕ over the coset universe
    OpTable product;                    // representative-wise ⊙
    AxiomReport hypothesis;
    AxiomReport ring;  // nearness-ring verification at the coset level
    std::string sub_label;

    structures::Context coset_context() const;
    std::string coset_label(std::size_t rep) const { return coset_universe.label(rep); }
};

// Requires the quotient hypothesis; throws PreconditionError otherwise.
QuotientRing build_quotient_ring(const NearnessSpace& space, const StructureCandidate& ambient,
                                 ObjectSet sub, const std::string& sub_label = "S");

}  // namespace nearness::quotient
