#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nearness/feature_system.hpp"
#include "nearness/op_table.hpp"
#include "nearness/report.hpp"

namespace nearness::structures {

enum class OpKind { add, mul };
enum class Side { left, right, two_sided };
enum class IntersectionKind { subring, ideal };

// Everything a checker needs: the ambient labels and op tables, the carrier
// under test, and the upper approximation the axioms close in. The upper set
// is supplied by the caller, so checks run unchanged on probe-derived spaces
// and on weak-coset universes whose upper approximation is descriptive.
struct Context {
    const Universe* universe = nullptr;
    const OpTable* add = nullptr;
    const OpTable* mul = nullptr;
    ObjectSet carrier;
    ObjectSet upper;
};

Context make_context(const NearnessSpace& space, const StructureCandidate& cand);
const OpTable& op_of(const Context& ctx, OpKind which);

bool is_groupoid(ObjectSet s, const OpTable& op);

// Elements of `within` acting as a two-sided identity on every carrier element.
std::vector<std::size_t> identity_candidates(const OpTable& op, ObjectSet carrier,
                                             ObjectSet within);

// Elements y of `carrier` with op(x,y) = op(y,x) = e.
std::vector<std::size_t> inverse_candidates(const OpTable& op, std::size_t x, ObjectSet carrier,
                                            std::size_t e);

AxiomReport closed_in_upper(const Context& ctx, OpKind which);
AxiomReport check_near_semigroup(const Context& ctx, OpKind which);
AxiomReport check_near_group(const Context& ctx, OpKind which);
AxiomReport check_nearness_ring(const Context& ctx);
AxiomReport check_element_props(const Context& ctx);

AxiomReport check_subnearness_ring(const NearnessSpace& space, ObjectSet sub,
                                   const StructureCandidate& ambient);
AxiomReport check_ideal(const NearnessSpace& space, ObjectSet ideal,
                        const StructureCandidate& ambient, Side side);
AxiomReport check_intersection_theorem(const NearnessSpace& space,
                                       std::span<const ObjectSet> parts,
                                       const StructureCandidate& ambient, IntersectionKind kind);
AxiomReport classify_units(const NearnessSpace& space, const StructureCandidate& cand);

}  // namespace nearness::structures
