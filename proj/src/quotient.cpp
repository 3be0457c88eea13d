#include "nearness/quotient.hpp"

#include <algorithm>
#include <map>

#include "nearness/errors.hpp"

namespace nearness::quotient {

WeakCoset weak_coset(const OpTable& add, std::size_t x, ObjectSet sub, ObjectSet carrier) {
    WeakCoset c;
    c.rep = x;
    c.members.insert(x);
    sub.for_each([&](std::size_t s) {
        const std::size_t xs = add.at(x, s);
        if (carrier.contains(xs)) c.members.insert(xs);
    });
    return c;
}

const WeakCoset& CosetFamily::by_rep(std::size_t rep) const {
    for (const auto& c : cosets) {
        if (c.rep == rep) return c;
    }
    throw InputError("no coset with the requested representative");
}

CosetFamily coset_family(const NearnessSpace& space, const StructureCandidate& ambient,
                         ObjectSet sub, bool extended) {
    if (!sub.subset_of(ambient.carrier)) {
        throw InputError("coset subset is not contained in the ambient carrier");
    }
    if (ambient.add == nullptr) throw InputError("weak cosets need the '+' operation table");
    const OpTable& add = *ambient.add;
    CosetFamily fam;
    fam.sub = sub;
    fam.extended = extended;
    fam.reps = extended ? space.upper_approx(ambient.carrier) : ambient.carrier;
    fam.reps.for_each([&](std::size_t x) {
        fam.cosets.push_back(weak_coset(add, x, sub, ambient.carrier));
    });
    return fam;
}

namespace {

WeakCoset coset_op(const NearnessSpace& space, const StructureCandidate& ambient, ObjectSet sub,
                   const OpTable& rep_op, const WeakCoset& a, const WeakCoset& b) {
    const std::size_t rep = rep_op.at(a.rep, b.rep);
    const ObjectSet upper = space.upper_approx(ambient.carrier);
    if (!upper.contains(rep)) {
        throw ClosureError("coset operation result '" + space.universe().label(rep) +
                           "' escapes the upper approximation of the carrier (operands " +
                           space.universe().label(a.rep) + ", " + space.universe().label(b.rep) +
                           ")");
    }
    return weak_coset(*ambient.add, rep, sub, ambient.carrier);
}

}  // namespace

WeakCoset coset_sum(const NearnessSpace& space, const StructureCandidate& ambient, ObjectSet sub,
                    const WeakCoset& a, const WeakCoset& b) {
    return coset_op(space, ambient, sub, *ambient.add, a, b);
}

WeakCoset coset_product(const NearnessSpace& space, const StructureCandidate& ambient,
                        ObjectSet sub, const WeakCoset& a, const WeakCoset& b) {
    return coset_op(space, ambient, sub, *ambient.mul, a, b);
}

AxiomReport check_quotient_hypothesis(const NearnessSpace& space,
                                      const StructureCandidate& ambient, ObjectSet sub,
                                      const std::string& sub_label, bool powerset_candidates,
                                      std::size_t powerset_bound) {
    const Universe& u = space.universe();
    AxiomReport rep;
    auto coset_label = [&](std::size_t x) { return u.label(x) + "+" + sub_label; };

    const CosetFamily base = coset_family(space, ambient, sub, false);
    const CosetFamily ext = coset_family(space, ambient, sub, true);

    nlohmann::json base_json = nlohmann::json::object();
    for (const auto& c : base.cosets) base_json[coset_label(c.rep)] = u.labels(c.members);
    rep.details["family"] = base_json;
    nlohmann::json ext_json = nlohmann::json::object();
    for (const auto& c : ext.cosets) ext_json[coset_label(c.rep)] = u.labels(c.members);
    rep.details["extended_family"] = ext_json;

    // Description masks of the base family members.
    std::uint64_t family_mask = 0;
    for (const auto& c : base.cosets) family_mask |= space.description_mask(c.members);

    bool all_included = true;
    nlohmann::json pairings = nlohmann::json::array();
    auto describe_tuple = [&](std::size_t desc_id) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& v : space.description_tuple(desc_id)) t.push_back(v);
        return t;
    };

    if (powerset_candidates) {
        // Opt-in powerset semantics: N*(R/~) over all subsets of O, inclusion
        // tested by member-set equality.
        auto candidates = descriptive::powerset(space, powerset_bound);
        std::vector<ObjectSet> members;
        for (const auto& c : base.cosets) members.push_back(c.members);
        auto upper_family = descriptive::family_upper_approx(space, members, candidates);
        for (const auto& c : ext.cosets) {
            const bool in = std::find(upper_family.begin(), upper_family.end(), c.members) !=
                            upper_family.end();
            if (!in) {
                all_included = false;
                rep.add_counterexample({"quotient-hypothesis",
                                        "membership",
                                        {coset_label(c.rep)},
                                        "",
                                        "",
                                        "extended coset not in the powerset upper approximation"});
            }
        }
        rep.details["candidates"] = "powerset";
    } else {
        for (const auto& c : ext.cosets) {
            const std::uint64_t q = space.description_mask(c.members);
            if ((q & family_mask) == 0) {
                all_included = false;
                rep.add_counterexample(
                    {"quotient-hypothesis",
                     "membership",
                     {coset_label(c.rep)},
                     "",
                     "",
                     "coset shares no description with any member of the family"});
                continue;
            }
            // Witness: the first family coset it is descriptively near, plus
            // the first shared description.
            for (const auto& fc : base.cosets) {
                const std::uint64_t common = q & space.description_mask(fc.members);
                if (common != 0) {
                    const auto desc = static_cast<std::size_t>(std::countr_zero(common));
                    pairings.push_back(nlohmann::json{{"coset", coset_label(c.rep)},
                                                      {"near", coset_label(fc.rep)},
                                                      {"via", describe_tuple(desc)}});
                    break;
                }
            }
        }
        rep.details["candidates"] = "weak cosets with representatives in the universe";
    }

    rep.set("quotient-hypothesis", all_included ? Verdict::pass : Verdict::fail, true);
    rep.witnesses["pairings"] = pairings;
    return rep;
}

structures::Context QuotientRing::coset_context() const {
    structures::Context ctx;
    ctx.universe = &coset_universe;
    ctx.add = &sum;
    ctx.mul = &product;
    ctx.carrier = base.reps;
    ctx.upper = family_upper;
    return ctx;
}

QuotientRing build_quotient_ring(const NearnessSpace& space, const StructureCandidate& ambient,
                                 ObjectSet sub, const std::string& sub_label) {
    if (ambient.add == nullptr || ambient.mul == nullptr) {
        throw InputError("quotient construction needs both operation tables");
    }
    QuotientRing q;
    q.sub_label = sub_label;
    q.hypothesis = check_quotient_hypothesis(space, ambient, sub, sub_label);
    if (!q.hypothesis.passed()) {
        throw PreconditionError("quotient hypothesis (N*(R))/~ ⊆ N*(R/~) does not hold");
    }

    const Universe& u = space.universe();
    q.base = coset_family(space, ambient, sub, false);
    q.extended = coset_family(space, ambient, sub, true);
    for (std::size_t x = 0; x < u.size(); ++x) {
        q.candidates.push_back(weak_coset(*ambient.add, x, sub, ambient.carrier));
    }

    // N*(R/~) across the candidate cosets.
    std::uint64_t family_mask = 0;
    for (const auto& c : q.base.cosets) family_mask |= space.description_mask(c.members);
    for (const auto& c : q.candidates) {
        if ((space.description_mask(c.members) & family_mask) != 0) q.family_upper.insert(c.rep);
    }

    std::vector<std::string> labels;
    for (std::size_t x = 0; x < u.size(); ++x) labels.push_back(u.label(x) + "+" + sub_label);
    q.coset_universe = Universe::from_ids(std::move(labels));

    // Representative-wise ⊕/⊙ coincide with the ambient tables under the
    // rep <-> coset indexing.
    q.sum = *ambient.add;
    q.sum.name = "⊕";
    q.product = *ambient.mul;
    q.product.name = "⊙";

    // Well-definedness is never assumed: cosets with equal member sets must
    // yield member-set-equal results under both operations.
    std::map<std::uint64_t, std::vector<std::size_t>> by_members;
    q.extended.reps.for_each(
        [&](std::size_t x) { by_members[q.candidates[x].members.bits()].push_back(x); });
    nlohmann::json dup_groups = nlohmann::json::array();
    for (const auto& [bits, reps] : by_members) {
        if (reps.size() < 2) continue;
        nlohmann::json g = nlohmann::json::array();
        for (std::size_t r : reps) g.push_back(q.coset_label(r));
        dup_groups.push_back(g);
    }
    q.ring.details["duplicate_member_sets"] = dup_groups;

    for (const auto* op : {&q.sum, &q.product}) {
        for (const auto& [bits_a, reps_a] : by_members) {
            for (const auto& [bits_b, reps_b] : by_members) {
                ObjectSet expect;
                bool have = false;
                for (std::size_t a : reps_a) {
                    for (std::size_t b : reps_b) {
                        const std::size_t r = op->at(a, b);
                        const ObjectSet res = q.candidates[r].members;
                        if (!have) {
                            expect = res;
                            have = true;
                        } else if (!(res == expect)) {
                            q.ring.anomalies.push_back(
                                {"well-definedness",
                                 op->name + " on member-set-equal cosets " + q.coset_label(a) +
                                     ", " + q.coset_label(b) + " yields a different member set"});
                        }
                    }
                }
            }
        }
    }

    AxiomReport ring = structures::check_nearness_ring(q.coset_context());
    ring.anomalies.insert(ring.anomalies.end(), q.ring.anomalies.begin(), q.ring.anomalies.end());
    ring.details["duplicate_member_sets"] = q.ring.details["duplicate_member_sets"];
    q.ring = std::move(ring);
    if (q.ring.passed()) {
        q.ring.witnesses["quotient"] = "R/w" + sub_label;
    }
    return q;
}

}  // namespace nearness::quotient
