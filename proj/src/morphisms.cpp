#include "nearness/morphisms.hpp"

#include <algorithm>
#include <map>

#include "nearness/errors.hpp"

namespace nearness::morphisms {

namespace {

using structures::identity_candidates;
using structures::inverse_candidates;
using structures::op_of;
using structures::OpKind;

struct Zero {
    std::optional<std::size_t> element;
    std::vector<std::size_t> all;
};

Zero locate_zero(const structures::Context& ctx) {
    Zero z;
    z.all = identity_candidates(op_of(ctx, OpKind::add), ctx.carrier, ctx.upper);
    if (!z.all.empty()) z.element = z.all.front();
    return z;
}

void note_zero_ambiguity(AxiomReport& rep, const structures::Context& ctx, const Zero& z,
                         const std::string& which) {
    if (z.all.size() > 1) {
        std::string labels;
        for (std::size_t e : z.all) {
            if (!labels.empty()) labels += ", ";
            labels += ctx.universe->label(e);
        }
        rep.anomalies.push_back(
            {"identity-not-unique", which + " has several additive identities: " + labels});
    }
}

}  // namespace

std::size_t MappingTable::at(std::size_t x) const {
    if (!defined(x)) throw InputError("mapping is undefined on object index " + std::to_string(x));
    return static_cast<std::size_t>(entries[x]);
}

HomEnv make_env(const NearnessSpace& s1, const StructureCandidate& r1, const NearnessSpace& s2,
                const StructureCandidate& r2) {
    return HomEnv{structures::make_context(s1, r1), structures::make_context(s2, r2)};
}

void validate_mapping(const MappingTable& m, const HomEnv& env) {
    const Universe& u1 = *env.from.universe;
    bool gap = false;
    std::string gap_label;
    env.from.upper.for_each([&](std::size_t x) {
        if (!m.defined(x) && !gap) {
            gap = true;
            gap_label = u1.label(x);
        }
    });
    if (gap) throw InputError("mapping is not total on N*(R1): '" + gap_label + "' is unmapped");
    env.from.upper.for_each([&](std::size_t x) {
        const std::size_t img = m.at(x);
        if (!env.to.upper.contains(img)) {
            throw InputError("image of '" + u1.label(x) + "' lies outside N*(R2)");
        }
    });
}

AxiomReport check_nearness_hom(const MappingTable& m, const HomEnv& env, bool strict) {
    validate_mapping(m, env);
    const Universe& u1 = *env.from.universe;
    const Universe& u2 = *env.to.universe;
    const OpTable& add1 = op_of(env.from, OpKind::add);
    const OpTable& add2 = op_of(env.to, OpKind::add);
    const OpTable& mul1 = op_of(env.from, OpKind::mul);
    const OpTable& mul2 = op_of(env.to, OpKind::mul);

    AxiomReport rep;
    rep.details["strict"] = strict;
    const ObjectSet pair_range = strict ? env.from.upper : env.from.carrier;

    auto check_law = [&](const OpTable& op1, const OpTable& op2, const std::string& axiom) {
        bool ok = true;
        std::size_t pairs = 0;
        pair_range.for_each([&](std::size_t x) {
            pair_range.for_each([&](std::size_t y) {
                const std::size_t s = op1.at(x, y);
                if (strict && !env.from.upper.contains(s)) return;  // result leaves the domain
                if (!m.defined(s)) {
                    throw InputError("domain gap: " + op1.name + " of ('" + u1.label(x) + "', '" +
                                     u1.label(y) + "') is unmapped");
                }
                ++pairs;
                const std::size_t lhs = m.at(s);
                const std::size_t rhs = op2.at(m.at(x), m.at(y));
                if (lhs != rhs) {
                    ok = false;
                    rep.add_counterexample({axiom,
                                            "equality",
                                            {u1.label(x), u1.label(y)},
                                            u2.label(lhs),
                                            u2.label(rhs),
                                            ""});
                }
            });
        });
        rep.set(axiom, ok ? Verdict::pass : Verdict::fail, true);
        rep.details[axiom] = {{"pairs", pairs}};
    };
    check_law(add1, add2, "add-law");
    check_law(mul1, mul2, "mul-law");

    // Classification over the declared domain.
    bool mono = true;
    std::map<std::size_t, std::size_t> seen;
    ObjectSet image;
    env.from.upper.for_each([&](std::size_t x) {
        const std::size_t img = m.at(x);
        image.insert(img);
        auto [it, inserted] = seen.emplace(img, x);
        if (!inserted) mono = false;
    });
    const bool epi = image == env.to.upper;
    rep.set("mono", mono ? Verdict::pass : Verdict::fail, false);
    rep.set("epi", epi ? Verdict::pass : Verdict::fail, false);
    rep.set("iso", (mono && epi) ? Verdict::pass : Verdict::fail, false);
    rep.witnesses["classification"] = mono && epi ? "nearness isomorphism"
                                      : mono      ? "nearness monomorphism"
                                      : epi       ? "nearness epimorphism"
                                                  : "nearness homomorphism candidate";
    return rep;
}

ObjectSet kernel(const MappingTable& m, const HomEnv& env) {
    validate_mapping(m, env);
    const Zero z = locate_zero(env.to);
    if (!z.element) {
        throw StructuralError("R2 has no additive near identity in its upper approximation");
    }
    ObjectSet k;
    env.from.carrier.for_each([&](std::size_t x) {
        if (m.at(x) == *z.element) k.insert(x);
    });
    return k;
}

AxiomReport check_hom_properties(const MappingTable& m, const HomEnv& env) {
    validate_mapping(m, env);
    const Universe& u1 = *env.from.universe;
    const Universe& u2 = *env.to.universe;
    const OpTable& add1 = op_of(env.from, OpKind::add);
    const OpTable& add2 = op_of(env.to, OpKind::add);
    AxiomReport rep;

    const Zero z1 = locate_zero(env.from);
    const Zero z2 = locate_zero(env.to);
    note_zero_ambiguity(rep, env.from, z1, "R1");
    note_zero_ambiguity(rep, env.to, z2, "R2");
    if (!z1.element || !z2.element) {
        rep.set("zero-preservation", Verdict::not_applicable, true);
        rep.set("inverse-preservation", Verdict::not_applicable, true);
        rep.details["reason"] = "additive identity missing on one side";
        return rep;
    }
    const std::size_t zero1 = *z1.element;
    const std::size_t zero2 = *z2.element;
    rep.witnesses["zero_R1"] = u1.label(zero1);
    rep.witnesses["zero_R2"] = u2.label(zero2);

    const std::size_t img_zero = m.at(zero1);
    rep.set("zero-preservation", img_zero == zero2 ? Verdict::pass : Verdict::fail, true);
    if (img_zero != zero2) {
        rep.add_counterexample({"zero-preservation",
                                "equality",
                                {u1.label(zero1)},
                                u2.label(img_zero),
                                u2.label(zero2),
                                ""});
    }

    bool inv_ok = true;
    std::size_t skipped = 0;
    env.from.carrier.for_each([&](std::size_t x) {
        const auto inv1 = inverse_candidates(add1, x, env.from.carrier, zero1);
        if (inv1.empty()) {
            ++skipped;
            return;
        }
        const std::size_t z = m.at(inv1.front());
        const std::size_t mx = m.at(x);
        bool bad = add2.at(mx, z) != zero2 || add2.at(z, mx) != zero2;
        if (!bad && env.to.carrier.contains(mx)) {
            const auto inv2 = inverse_candidates(add2, mx, env.to.carrier, zero2);
            if (!inv2.empty() && inv2.front() != z) bad = true;
        }
        if (bad) {
            inv_ok = false;
            rep.add_counterexample({"inverse-preservation",
                                    "equality",
                                    {u1.label(x)},
                                    u2.label(z),
                                    "",
                                    "image of -x is not the inverse of the image"});
        }
    });
    rep.set("inverse-preservation", inv_ok ? Verdict::pass : Verdict::fail, true);
    rep.details["skipped_without_inverse"] = skipped;
    return rep;
}

AxiomReport check_image_subring(const NearnessSpace& s1, const NearnessSpace& s2,
                                const MappingTable& m, ObjectSet sub,
                                const StructureCandidate& r1, const StructureCandidate& r2) {
    AxiomReport rep;
    const Universe& u2 = s2.universe();

    AxiomReport sub_check = structures::check_subnearness_ring(s1, sub, r1);
    rep.set("sub-verified", sub_check.passed() ? Verdict::pass : Verdict::fail, false);
    if (!sub_check.passed()) {
        rep.set("image-subring", Verdict::not_applicable, true);
        rep.details["reason"] = "sub is not a verified subnearness ring of R1";
        return rep;
    }

    const ObjectSet upper_sub = s1.upper_approx(sub);
    ObjectSet image_of_upper;
    upper_sub.for_each([&](std::size_t x) { image_of_upper.insert(m.at(x)); });
    ObjectSet image;
    sub.for_each([&](std::size_t x) { image.insert(m.at(x)); });
    const ObjectSet upper_of_image = s2.upper_approx(image);

    rep.details["image"] = u2.labels(image);
    rep.details["image_of_upper"] = u2.labels(image_of_upper);
    rep.details["upper_of_image"] = u2.labels(upper_of_image);
    const bool commutes = image_of_upper == upper_of_image;
    rep.set("commutation", commutes ? Verdict::pass : Verdict::fail, false);
    if (!commutes) {
        rep.set("image-subring", Verdict::not_applicable, true);
        rep.details["reason"] = "η(N*(S)) differs from N*(η(S))";
        return rep;
    }
    if (!image.subset_of(r2.carrier)) {
        rep.set("image-subring", Verdict::not_applicable, true);
        rep.details["reason"] = "η(S) is not contained in the carrier of R2";
        return rep;
    }

    AxiomReport image_check = structures::check_subnearness_ring(s2, image, r2);
    rep.set("image-subring", image_check.passed() ? Verdict::pass : Verdict::fail, true);
    for (const auto& ce : image_check.counterexamples) rep.add_counterexample(ce);

    bool sub_commutative = true;
    sub.for_each([&](std::size_t x) {
        sub.for_each([&](std::size_t y) {
            if (r1.mul->at(x, y) != r1.mul->at(y, x)) sub_commutative = false;
        });
    });
    if (sub_commutative) {
        bool image_commutative = true;
        image.for_each([&](std::size_t x) {
            image.for_each([&](std::size_t y) {
                if (r2.mul->at(x, y) != r2.mul->at(y, x)) image_commutative = false;
            });
        });
        rep.set("image-commutative", image_commutative ? Verdict::pass : Verdict::fail, false);
        if (!image_commutative) {
            rep.anomalies.push_back({"commutativity-not-propagated",
                                     "S is commutative but η(S) is not"});
        }
    }
    return rep;
}

AxiomReport check_kernel_ideal(const NearnessSpace& s1, const MappingTable& m,
                               const StructureCandidate& r1, const HomEnv& env) {
    AxiomReport rep;
    const Universe& u1 = s1.universe();
    const ObjectSet k = kernel(m, env);
    rep.witnesses["kernel"] = u1.labels(k);
    if (k.empty()) {
        rep.set("kernel-ideal", Verdict::not_applicable, true);
        rep.details["reason"] = "kernel is empty";
        return rep;
    }
    const ObjectSet upper_k = s1.upper_approx(k);
    if (!structures::is_groupoid(upper_k, op_of(env.from, OpKind::add)) ||
        !structures::is_groupoid(upper_k, op_of(env.from, OpKind::mul))) {
        rep.set("kernel-ideal", Verdict::not_applicable, true);
        rep.details["reason"] = "N*(Ker) is not a groupoid under both operations";
        return rep;
    }
    AxiomReport ideal = structures::check_ideal(s1, k, r1, structures::Side::two_sided);
    rep.set("kernel-ideal", ideal.passed() ? Verdict::pass : Verdict::fail, true);
    for (const auto& ce : ideal.counterexamples) rep.add_counterexample(ce);
    if (!ideal.passed()) {
        rep.anomalies.push_back({"kernel-ideal-violation",
                                 "hypotheses hold but the kernel fails the ideal check"});
    }
    return rep;
}

NaturalHom natural_hom(const NearnessSpace& space, const StructureCandidate& ambient,
                       ObjectSet sub, const std::string& sub_label) {
    NaturalHom nh{MappingTable{}, quotient::build_quotient_ring(space, ambient, sub, sub_label),
                  AxiomReport{}};
    const ObjectSet domain = space.upper_approx(ambient.carrier);
    nh.map.domain = domain;
    nh.map.codomain = nh.quotient.family_upper;
    nh.map.entries.assign(space.universe().size(), -1);
    domain.for_each([&](std::size_t x) { nh.map.entries[x] = static_cast<int>(x); });

    HomEnv env{structures::make_context(space, ambient), nh.quotient.coset_context()};
    nh.hom = check_nearness_hom(nh.map, env);
    return nh;
}

AxiomReport check_restricted_hom(const MappingTable& m, ObjectSet sub, const HomEnv& env) {
    validate_mapping(m, env);
    if (sub.empty()) throw InputError("restricted homomorphism requires a nonempty subset");
    if (!sub.subset_of(env.from.carrier)) {
        throw InputError("restriction subset is not contained in R1");
    }
    const Universe& u1 = *env.from.universe;
    const Universe& u2 = *env.to.universe;
    AxiomReport rep;
    auto check_law = [&](const OpTable& op1, const OpTable& op2, const std::string& axiom) {
        bool ok = true;
        sub.for_each([&](std::size_t x) {
            sub.for_each([&](std::size_t y) {
                const std::size_t s = op1.at(x, y);
                if (!m.defined(s)) {
                    throw InputError("domain gap: " + op1.name + " of ('" + u1.label(x) + "', '" +
                                     u1.label(y) + "') is unmapped");
                }
                const std::size_t lhs = m.at(s);
                const std::size_t rhs = op2.at(m.at(x), m.at(y));
                if (lhs != rhs) {
                    ok = false;
                    rep.add_counterexample({axiom,
                                            "equality",
                                            {u1.label(x), u1.label(y)},
                                            u2.label(lhs),
                                            u2.label(rhs),
                                            ""});
                }
            });
        });
        rep.set(axiom, ok ? Verdict::pass : Verdict::fail, true);
    };
    check_law(op_of(env.from, OpKind::add), op_of(env.to, OpKind::add), "restricted-add-law");
    check_law(op_of(env.from, OpKind::mul), op_of(env.to, OpKind::mul), "restricted-mul-law");
    rep.details["restricted_to"] = u1.labels(sub);
    return rep;
}

FirstIsoResult first_iso_check(const NearnessSpace& s1, const NearnessSpace& s2,
                               const MappingTable& chi, const StructureCandidate& r1,
                               const StructureCandidate& r2) {
    FirstIsoResult result;
    AxiomReport& rep = result.report;
    const Universe& u1 = s1.universe();
    const Universe& u2 = s2.universe();
    HomEnv env = make_env(s1, r1, s2, r2);

    auto hypothesis_failed = [&](const std::string& which) {
        rep.set("iso", Verdict::not_applicable, true);
        rep.details["failed_hypothesis"] = which;
        return result;
    };

    AxiomReport hom = check_nearness_hom(chi, env);
    rep.set("hom", hom.passed() ? Verdict::pass : Verdict::fail, false);
    if (!hom.passed()) return hypothesis_failed("chi is not a nearness ring homomorphism");

    result.kernel_set = kernel(chi, env);
    rep.witnesses["kernel"] = u1.labels(result.kernel_set);
    rep.set("kernel-nonempty", result.kernel_set.empty() ? Verdict::fail : Verdict::pass, false);
    if (result.kernel_set.empty()) return hypothesis_failed("kernel is empty");

    const ObjectSet upper_k = s1.upper_approx(result.kernel_set);
    const bool groupoids = structures::is_groupoid(upper_k, op_of(env.from, OpKind::add)) &&
                           structures::is_groupoid(upper_k, op_of(env.from, OpKind::mul));
    rep.set("kernel-groupoids", groupoids ? Verdict::pass : Verdict::fail, false);
    if (!groupoids) return hypothesis_failed("N*(Ker chi) is not a groupoid under both operations");

    AxiomReport hyp = quotient::check_quotient_hypothesis(s1, r1, result.kernel_set, "Ker");
    rep.set("quotient-hypothesis", hyp.verdict("quotient-hypothesis"), false);
    if (!hyp.passed()) return hypothesis_failed("quotient hypothesis fails for (R1, Ker chi)");

    ObjectSet chi_of_upper;
    env.from.upper.for_each([&](std::size_t x) { chi_of_upper.insert(chi.at(x)); });
    r1.carrier.for_each([&](std::size_t x) { result.image.insert(chi.at(x)); });
    const ObjectSet upper_of_image = s2.upper_approx(result.image);
    rep.witnesses["image"] = u2.labels(result.image);
    rep.details["chi_of_upper"] = u2.labels(chi_of_upper);
    rep.details["upper_of_image"] = u2.labels(upper_of_image);
    const bool image_condition = chi_of_upper == upper_of_image;
    rep.set("image-condition", image_condition ? Verdict::pass : Verdict::fail, false);
    if (!image_condition) return hypothesis_failed("chi(N*(R1)) differs from N*(chi(R1))");

    result.quotient = quotient::build_quotient_ring(s1, r1, result.kernel_set, "Ker");
    const quotient::QuotientRing& q = *result.quotient;

    const auto ids =
        identity_candidates(op_of(env.to, OpKind::add), result.image, upper_of_image);
    if (ids.empty()) return hypothesis_failed("chi(R1) has no additive near identity");
    if (ids.size() > 1) {
        rep.anomalies.push_back({"identity-not-unique",
                                 "chi(R1) has several additive identities"});
    }
    result.image_identity = ids.front();
    rep.witnesses["image_identity"] = u2.label(ids.front());

    // The case-split eta of the theorem: the coset rule on (N*(R1))/~ and the
    // image identity elsewhere.
    result.eta.assign(u1.size(), -1);
    q.family_upper.for_each([&](std::size_t repr) {
        result.eta[repr] = static_cast<int>(env.from.upper.contains(repr) ? chi.at(repr)
                                                                          : ids.front());
    });
    nlohmann::json eta_json = nlohmann::json::object();
    q.family_upper.for_each(
        [&](std::size_t repr) { eta_json[q.coset_label(repr)] = u2.label(result.eta[repr]); });
    rep.witnesses["eta"] = eta_json;

    // Well-definedness is re-verified, not trusted: member-set-equal cosets
    // must share an image.
    bool well_defined = true;
    q.family_upper.for_each([&](std::size_t a) {
        q.family_upper.for_each([&](std::size_t b) {
            if (a >= b) return;
            if (q.candidates[a].members == q.candidates[b].members &&
                result.eta[a] != result.eta[b]) {
                well_defined = false;
                rep.add_counterexample({"well-defined",
                                        "equality",
                                        {q.coset_label(a), q.coset_label(b)},
                                        u2.label(result.eta[a]),
                                        u2.label(result.eta[b]),
                                        "equal member sets with different images"});
            }
        });
    });
    rep.set("well-defined", well_defined ? Verdict::pass : Verdict::fail, true);

    auto check_restricted = [&](const OpTable& rep_op, const OpTable& op2,
                                const std::string& axiom) {
        bool ok = true;
        q.base.reps.for_each([&](std::size_t a) {
            q.base.reps.for_each([&](std::size_t b) {
                const std::size_t r = rep_op.at(a, b);
                if (!q.family_upper.contains(r) || result.eta[r] < 0) {
                    ok = false;
                    rep.add_counterexample({axiom,
                                            "membership",
                                            {q.coset_label(a), q.coset_label(b)},
                                            q.coset_label(r),
                                            "",
                                            "result coset outside N*(R1/wKer)"});
                    return;
                }
                const std::size_t lhs = static_cast<std::size_t>(result.eta[r]);
                const std::size_t rhs = op2.at(static_cast<std::size_t>(result.eta[a]),
                                               static_cast<std::size_t>(result.eta[b]));
                if (lhs != rhs) {
                    ok = false;
                    rep.add_counterexample({axiom,
                                            "equality",
                                            {q.coset_label(a), q.coset_label(b)},
                                            u2.label(lhs),
                                            u2.label(rhs),
                                            ""});
                }
            });
        });
        rep.set(axiom, ok ? Verdict::pass : Verdict::fail, true);
    };
    check_restricted(q.sum, op_of(env.to, OpKind::add), "restricted-add-law");
    check_restricted(q.product, op_of(env.to, OpKind::mul), "restricted-mul-law");

    const bool iso = rep.verdict_is("well-defined", Verdict::pass) &&
                     rep.verdict_is("restricted-add-law", Verdict::pass) &&
                     rep.verdict_is("restricted-mul-law", Verdict::pass);
    rep.set("iso", iso ? Verdict::pass : Verdict::fail, true);
    if (iso) rep.witnesses["relation"] = "R1/wKer ≃_rn chi(R1)";
    return result;
}

}  // namespace nearness::morphisms
