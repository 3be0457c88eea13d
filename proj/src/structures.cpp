#include "nearness/structures.hpp"

#include <algorithm>

#include "nearness/errors.hpp"

namespace nearness::structures {

namespace {

std::string join_labels(const Universe& u, const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += u.label(xs[i]);
    }
    return out;
}

}  // namespace

Context make_context(const NearnessSpace& space, const StructureCandidate& cand) {
    Context ctx;
    ctx.universe = &space.universe();
    ctx.add = cand.add;
    ctx.mul = cand.mul;
    ctx.carrier = cand.carrier;
    ctx.upper = space.upper_approx(cand.carrier);
    return ctx;
}

const OpTable& op_of(const Context& ctx, OpKind which) {
    const OpTable* op = which == OpKind::add ? ctx.add : ctx.mul;
    if (op == nullptr) {
        throw InputError(std::string("structure candidate lacks the '") +
                         (which == OpKind::add ? "+" : "·") + "' operation table");
    }
    return *op;
}

bool is_groupoid(ObjectSet s, const OpTable& op) {
    if (s.empty()) return false;
    bool closed = true;
    s.for_each([&](std::size_t x) {
        s.for_each([&](std::size_t y) {
            if (!s.contains(op.at(x, y))) closed = false;
        });
    });
    return closed;
}

std::vector<std::size_t> identity_candidates(const OpTable& op, ObjectSet carrier,
                                             ObjectSet within) {
    std::vector<std::size_t> out;
    within.for_each([&](std::size_t e) {
        bool acts = true;
        carrier.for_each([&](std::size_t x) {
            if (op.at(x, e) != x || op.at(e, x) != x) acts = false;
        });
        if (acts) out.push_back(e);
    });
    return out;
}

std::vector<std::size_t> inverse_candidates(const OpTable& op, std::size_t x, ObjectSet carrier,
                                            std::size_t e) {
    std::vector<std::size_t> out;
    carrier.for_each([&](std::size_t y) {
        if (op.at(x, y) == e && op.at(y, x) == e) out.push_back(y);
    });
    return out;
}

namespace {

// Closure of the carrier in the upper approximation (NG1 / NS1 shape).
void check_closure(const Context& ctx, const OpTable& op, const std::string& axiom,
                   AxiomReport& rep, bool required) {
    const Universe& u = *ctx.universe;
    std::size_t pairs = 0, violations = 0;
    ctx.carrier.for_each([&](std::size_t x) {
        ctx.carrier.for_each([&](std::size_t y) {
            ++pairs;
            const std::size_t r = op.at(x, y);
            if (!ctx.upper.contains(r)) {
                ++violations;
                rep.add_counterexample({axiom,
                                        "membership",
                                        {u.label(x), u.label(y)},
                                        u.label(r),
                                        "",
                                        "result outside the upper approximation"});
            }
        });
    });
    rep.set(axiom, violations == 0 ? Verdict::pass : Verdict::fail, required);
    rep.details[axiom] = {{"pairs", pairs}, {"violations", violations}};
}

// Associativity over carrier triples: equalities are object equalities in O,
// and every result the axiom demands must lie in the upper approximation.
void check_associativity(const Context& ctx, const OpTable& op, const std::string& axiom,
                         AxiomReport& rep, bool required) {
    const Universe& u = *ctx.universe;
    std::size_t triples = 0, eq_violations = 0, mem_violations = 0;
    ctx.carrier.for_each([&](std::size_t x) {
        ctx.carrier.for_each([&](std::size_t y) {
            ctx.carrier.for_each([&](std::size_t z) {
                ++triples;
                const std::size_t xy = op.at(x, y);
                const std::size_t yz = op.at(y, z);
                const std::size_t lhs = op.at(xy, z);
                const std::size_t rhs = op.at(x, yz);
                if (lhs != rhs) {
                    ++eq_violations;
                    rep.add_counterexample({axiom,
                                            "equality",
                                            {u.label(x), u.label(y), u.label(z)},
                                            u.label(lhs),
                                            u.label(rhs),
                                            ""});
                }
                std::vector<std::size_t> escapes;
                for (std::size_t v : {xy, yz, lhs, rhs}) {
                    if (!ctx.upper.contains(v)) escapes.push_back(v);
                }
                if (!escapes.empty()) {
                    ++mem_violations;
                    rep.add_counterexample({axiom,
                                            "membership",
                                            {u.label(x), u.label(y), u.label(z)},
                                            "",
                                            "",
                                            "outside the upper approximation: " +
                                                join_labels(u, escapes)});
                }
            });
        });
    });
    rep.set(axiom, (eq_violations == 0 && mem_violations == 0) ? Verdict::pass : Verdict::fail,
            required);
    rep.details[axiom] = {{"triples", triples},
                          {"equality_violations", eq_violations},
                          {"membership_violations", mem_violations}};
}

void check_commutativity(const Context& ctx, const OpTable& op, const std::string& axiom,
                         AxiomReport& rep, bool required) {
    const Universe& u = *ctx.universe;
    std::size_t violations = 0;
    ctx.carrier.for_each([&](std::size_t x) {
        ctx.carrier.for_each([&](std::size_t y) {
            if (y <= x) return;
            const std::size_t xy = op.at(x, y);
            const std::size_t yx = op.at(y, x);
            if (xy != yx) {
                ++violations;
                rep.add_counterexample(
                    {axiom, "equality", {u.label(x), u.label(y)}, u.label(xy), u.label(yx), ""});
            }
        });
    });
    rep.set(axiom, violations == 0 ? Verdict::pass : Verdict::fail, required);
}

}  // namespace

AxiomReport closed_in_upper(const Context& ctx, OpKind which) {
    if (ctx.carrier.empty()) throw InputError("carrier must be nonempty");
    AxiomReport rep;
    const OpTable& op = op_of(ctx, which);
    check_closure(ctx, op, "closure", rep, true);
    rep.witnesses["op"] = op.name;
    return rep;
}

AxiomReport check_near_semigroup(const Context& ctx, OpKind which) {
    if (ctx.carrier.empty()) throw InputError("carrier must be nonempty");
    AxiomReport rep;
    const OpTable& op = op_of(ctx, which);
    check_closure(ctx, op, "NS1", rep, true);
    check_associativity(ctx, op, "NS2", rep, true);
    rep.witnesses["op"] = op.name;
    return rep;
}

AxiomReport check_near_group(const Context& ctx, OpKind which) {
    if (ctx.carrier.empty()) throw InputError("carrier must be nonempty");
    AxiomReport rep;
    const OpTable& op = op_of(ctx, which);
    const Universe& u = *ctx.universe;
    rep.witnesses["op"] = op.name;

    check_closure(ctx, op, "NG1", rep, true);
    check_associativity(ctx, op, "NG2", rep, true);

    const auto ids = identity_candidates(op, ctx.carrier, ctx.upper);
    if (ids.empty()) {
        rep.set("NG3", Verdict::fail, true);
        rep.add_counterexample({"NG3",
                                "existence",
                                {},
                                "",
                                "",
                                "no element of the upper approximation acts as a two-sided "
                                "identity on the carrier"});
    } else {
        rep.set("NG3", Verdict::pass, true);
        rep.witnesses["identity"] = u.label(ids.front());
        if (ids.size() > 1) {
            rep.anomalies.push_back(
                {"identity-not-unique",
                 "distinct identity elements act on the carrier: " + join_labels(u, ids)});
        }
    }

    if (ids.empty()) {
        rep.set("NG4", Verdict::not_applicable, true);
    } else {
        const std::size_t e = ids.front();
        bool all_have = true;
        nlohmann::json inverses = nlohmann::json::object();
        ctx.carrier.for_each([&](std::size_t x) {
            const auto inv = inverse_candidates(op, x, ctx.carrier, e);
            if (inv.empty()) {
                all_have = false;
                rep.add_counterexample({"NG4",
                                        "existence",
                                        {u.label(x)},
                                        "",
                                        "",
                                        "no inverse within the carrier"});
            } else {
                inverses[u.label(x)] = u.label(inv.front());
                if (inv.size() > 1) {
                    rep.anomalies.push_back({"inverse-not-unique",
                                             "element " + u.label(x) + " has inverses: " +
                                                 join_labels(u, inv)});
                }
            }
        });
        rep.set("NG4", all_have ? Verdict::pass : Verdict::fail, true);
        rep.witnesses["inverses"] = inverses;
    }

    check_commutativity(ctx, op, "abelian", rep, false);
    return rep;
}

AxiomReport check_nearness_ring(const Context& ctx) {
    if (ctx.carrier.empty()) throw InputError("carrier must be nonempty");
    const OpTable& add = op_of(ctx, OpKind::add);
    const OpTable& mul = op_of(ctx, OpKind::mul);
    const Universe& u = *ctx.universe;
    AxiomReport rep;

    AxiomReport ng = check_near_group(ctx, OpKind::add);
    const bool nr1 = ng.verdict_is("NG1", Verdict::pass) && ng.verdict_is("NG2", Verdict::pass) &&
                     ng.verdict_is("NG3", Verdict::pass) && ng.verdict_is("NG4", Verdict::pass) &&
                     ng.verdict_is("abelian", Verdict::pass);
    rep.set("NR1", nr1 ? Verdict::pass : Verdict::fail, true);
    rep.absorb("NR1", ng);

    AxiomReport ns = check_near_semigroup(ctx, OpKind::mul);
    const bool nr2 = ns.verdict_is("NS1", Verdict::pass) && ns.verdict_is("NS2", Verdict::pass);
    rep.set("NR2", nr2 ? Verdict::pass : Verdict::fail, true);
    rep.absorb("NR2", ns);

    // NR3: both distributive laws, equalities in O, every intermediate result
    // inside the upper approximation.
    std::size_t triples = 0, eq_violations = 0, mem_violations = 0;
    ctx.carrier.for_each([&](std::size_t x) {
        ctx.carrier.for_each([&](std::size_t y) {
            ctx.carrier.for_each([&](std::size_t z) {
                ++triples;
                const std::size_t y_plus_z = add.at(y, z);
                const std::size_t left_lhs = mul.at(x, y_plus_z);
                const std::size_t xy = mul.at(x, y);
                const std::size_t xz = mul.at(x, z);
                const std::size_t left_rhs = add.at(xy, xz);

                const std::size_t x_plus_y = add.at(x, y);
                const std::size_t right_lhs = mul.at(x_plus_y, z);
                const std::size_t xz2 = mul.at(x, z);
                const std::size_t yz2 = mul.at(y, z);
                const std::size_t right_rhs = add.at(xz2, yz2);

                if (left_lhs != left_rhs) {
                    ++eq_violations;
                    rep.add_counterexample({"NR3",
                                            "equality",
                                            {u.label(x), u.label(y), u.label(z)},
                                            u.label(left_lhs),
                                            u.label(left_rhs),
                                            "left distributive law"});
                }
                if (right_lhs != right_rhs) {
                    ++eq_violations;
                    rep.add_counterexample({"NR3",
                                            "equality",
                                            {u.label(x), u.label(y), u.label(z)},
                                            u.label(right_lhs),
                                            u.label(right_rhs),
                                            "right distributive law"});
                }
                std::vector<std::size_t> escapes;
                for (std::size_t v :
                     {y_plus_z, left_lhs, xy, xz, left_rhs, x_plus_y, right_lhs, yz2, right_rhs}) {
                    if (!ctx.upper.contains(v)) escapes.push_back(v);
                }
                if (!escapes.empty()) {
                    std::sort(escapes.begin(), escapes.end());
                    escapes.erase(std::unique(escapes.begin(), escapes.end()), escapes.end());
                    ++mem_violations;
                    rep.add_counterexample({"NR3",
                                            "membership",
                                            {u.label(x), u.label(y), u.label(z)},
                                            "",
                                            "",
                                            "outside the upper approximation: " +
                                                join_labels(u, escapes)});
                }
            });
        });
    });
    rep.set("NR3", (eq_violations == 0 && mem_violations == 0) ? Verdict::pass : Verdict::fail,
            true);
    rep.details["NR3"] = {{"triples", triples},
                          {"equality_violations", eq_violations},
                          {"membership_violations", mem_violations}};

    // NR4 (commutative ring) and NR5 (ring with identity) are classification
    // flags, not requirements.
    check_commutativity(ctx, mul, "NR4", rep, false);

    const auto ones = identity_candidates(mul, ctx.carrier, ctx.upper);
    rep.set("NR5", ones.empty() ? Verdict::fail : Verdict::pass, false);
    if (!ones.empty()) {
        rep.witnesses["multiplicative_identity"] = u.label(ones.front());
        if (ones.size() > 1) {
            nlohmann::json all = nlohmann::json::array();
            for (std::size_t e : ones) all.push_back(u.label(e));
            rep.witnesses["multiplicative_identity_candidates"] = all;
        }
    } else {
        rep.add_counterexample({"NR5",
                                "existence",
                                {},
                                "",
                                "",
                                "no element of the upper approximation is a two-sided "
                                "multiplicative identity on the carrier"});
    }

    rep.details["carrier"] = u.labels(ctx.carrier);
    rep.details["upper"] = u.labels(ctx.upper);
    return rep;
}

AxiomReport check_element_props(const Context& ctx) {
    const OpTable& add = op_of(ctx, OpKind::add);
    const OpTable& mul = op_of(ctx, OpKind::mul);
    const Universe& u = *ctx.universe;
    AxiomReport rep;
    const std::vector<std::string> axioms = {"zero-product", "negation-product",
                                             "negation-negation"};
    auto all_na = [&](const std::string& why) {
        for (const auto& a : axioms) rep.set(a, Verdict::not_applicable, true);
        rep.details["reason"] = why;
        return rep;
    };

    const auto zeros = identity_candidates(add, ctx.carrier, ctx.upper);
    if (zeros.empty()) return all_na("no additive near identity");
    const std::size_t zero = zeros.front();
    rep.witnesses["zero"] = u.label(zero);
    if (!ctx.carrier.contains(zero)) return all_na("additive identity not in the carrier");

    bool hypothesis = true;
    ctx.carrier.for_each([&](std::size_t x) {
        if (!ctx.carrier.contains(mul.at(zero, x)) || !ctx.carrier.contains(mul.at(x, zero))) {
            hypothesis = false;
        }
    });
    if (!hypothesis) return all_na("0·x or x·0 leaves the carrier");

    std::vector<int> neg(u.size(), -1);
    ctx.carrier.for_each([&](std::size_t x) {
        const auto inv = inverse_candidates(add, x, ctx.carrier, zero);
        if (!inv.empty()) neg[x] = static_cast<int>(inv.front());
        if (inv.size() > 1) {
            rep.anomalies.push_back({"inverse-not-unique",
                                     "element " + u.label(x) + " has inverses: " +
                                         join_labels(u, inv)});
        }
    });

    bool zero_ok = true;
    ctx.carrier.for_each([&](std::size_t x) {
        if (mul.at(x, zero) != zero || mul.at(zero, x) != zero) {
            zero_ok = false;
            rep.add_counterexample({"zero-product",
                                    "equality",
                                    {u.label(x)},
                                    u.label(mul.at(x, zero)),
                                    u.label(zero),
                                    ""});
        }
    });
    rep.set("zero-product", zero_ok ? Verdict::pass : Verdict::fail, true);

    std::size_t skipped = 0;
    bool neg_prod_ok = true, neg_neg_ok = true;
    ctx.carrier.for_each([&](std::size_t x) {
        ctx.carrier.for_each([&](std::size_t y) {
            if (neg[x] < 0 || neg[y] < 0) {
                ++skipped;
                return;
            }
            const std::size_t nx = static_cast<std::size_t>(neg[x]);
            const std::size_t ny = static_cast<std::size_t>(neg[y]);
            const std::size_t xy = mul.at(x, y);
            if (ctx.carrier.contains(xy) && neg[xy] >= 0) {
                const std::size_t nxy = static_cast<std::size_t>(neg[xy]);
                if (mul.at(x, ny) != nxy || mul.at(nx, y) != nxy) {
                    neg_prod_ok = false;
                    rep.add_counterexample({"negation-product",
                                            "equality",
                                            {u.label(x), u.label(y)},
                                            u.label(mul.at(x, ny)),
                                            u.label(nxy),
                                            ""});
                }
            } else {
                ++skipped;
            }
            if (mul.at(nx, ny) != xy) {
                neg_neg_ok = false;
                rep.add_counterexample({"negation-negation",
                                        "equality",
                                        {u.label(x), u.label(y)},
                                        u.label(mul.at(nx, ny)),
                                        u.label(xy),
                                        ""});
            }
        });
    });
    rep.set("negation-product", neg_prod_ok ? Verdict::pass : Verdict::fail, true);
    rep.set("negation-negation", neg_neg_ok ? Verdict::pass : Verdict::fail, true);
    rep.details["skipped_pairs"] = skipped;
    return rep;
}

AxiomReport check_subnearness_ring(const NearnessSpace& space, ObjectSet sub,
                                   const StructureCandidate& ambient) {
    if (sub.empty()) throw InputError("subset must be nonempty");
    if (!sub.subset_of(ambient.carrier)) {
        throw InputError("subset is not contained in the ambient carrier");
    }
    const Context actx = make_context(space, ambient);
    const OpTable& add = op_of(actx, OpKind::add);
    const OpTable& mul = op_of(actx, OpKind::mul);
    const Universe& u = *actx.universe;

    AxiomReport rep;
    AxiomReport ambient_ring = check_nearness_ring(actx);
    const bool ambient_ok = ambient_ring.passed();
    rep.set("ambient-ring", ambient_ok ? Verdict::pass : Verdict::fail, false);

    const ObjectSet upper_sub = space.upper_approx(sub);
    rep.details["sub"] = u.labels(sub);
    rep.details["sub_upper"] = u.labels(upper_sub);

    // Theorem hypothesis: (N*S, +) and (N*S, ·) are groupoids.
    bool hyp_ok = true;
    for (auto [op, axiom] : {std::pair<const OpTable*, const char*>{&add, "hypothesis-add-groupoid"},
                             {&mul, "hypothesis-mul-groupoid"}}) {
        bool ok = true;
        upper_sub.for_each([&](std::size_t x) {
            upper_sub.for_each([&](std::size_t y) {
                const std::size_t r = op->at(x, y);
                if (!upper_sub.contains(r) && ok) {
                    ok = false;
                    rep.add_counterexample({axiom,
                                            "membership",
                                            {u.label(x), u.label(y)},
                                            u.label(r),
                                            "",
                                            "upper approximation is not a groupoid"});
                }
            });
        });
        rep.set(axiom, ok ? Verdict::pass : Verdict::fail, false);
        hyp_ok = hyp_ok && ok;
    }
    if (!hyp_ok) {
        rep.set("subring", Verdict::not_applicable, true);
        return rep;
    }

    const auto zeros = identity_candidates(add, ambient.carrier, actx.upper);
    if (zeros.empty()) {
        rep.set("subring", Verdict::not_applicable, true);
        rep.details["reason"] = "no additive near identity for the ambient carrier";
        return rep;
    }
    if (zeros.size() > 1) {
        rep.anomalies.push_back({"identity-not-unique",
                                 "distinct additive identities: " + join_labels(u, zeros)});
    }
    const std::size_t zero = zeros.front();

    // Criterion: the unique additive inverse within the ambient carrier of
    // every subset element lies in the subset.
    bool criterion = true;
    nlohmann::json inverses = nlohmann::json::object();
    sub.for_each([&](std::size_t x) {
        const auto inv = inverse_candidates(add, x, ambient.carrier, zero);
        if (inv.empty()) {
            criterion = false;
            rep.add_counterexample({"subring",
                                    "existence",
                                    {u.label(x)},
                                    "",
                                    "",
                                    "no additive inverse within the ambient carrier"});
            return;
        }
        if (inv.size() > 1) {
            rep.anomalies.push_back({"inverse-not-unique",
                                     "element " + u.label(x) + " has inverses: " +
                                         join_labels(u, inv)});
        }
        inverses[u.label(x)] = u.label(inv.front());
        if (!sub.contains(inv.front())) {
            criterion = false;
            rep.add_counterexample({"subring",
                                    "membership",
                                    {u.label(x)},
                                    u.label(inv.front()),
                                    "",
                                    "-x lies outside the subset"});
        }
    });
    rep.set("subring", criterion ? Verdict::pass : Verdict::fail, true);
    rep.witnesses["inverses"] = inverses;

    // Cross-validation: the subset checked as a nearness ring in its own right.
    StructureCandidate sub_cand{sub, ambient.add, ambient.mul};
    const Context sctx = make_context(space, sub_cand);
    AxiomReport cross = check_nearness_ring(sctx);
    const bool cross_ok = cross.verdict_is("NR1", Verdict::pass) &&
                          cross.verdict_is("NR2", Verdict::pass) &&
                          cross.verdict_is("NR3", Verdict::pass);
    rep.details["cross_check"] = {{"NR1", verdict_name(cross.verdict("NR1"))},
                                  {"NR2", verdict_name(cross.verdict("NR2"))},
                                  {"NR3", verdict_name(cross.verdict("NR3"))}};
    if (ambient_ok && criterion != cross_ok) {
        rep.anomalies.push_back(
            {"subring-cross-check-mismatch",
             std::string("inverse criterion says ") + (criterion ? "pass" : "fail") +
                 " but the direct nearness-ring check says " + (cross_ok ? "pass" : "fail")});
    }
    return rep;
}

AxiomReport check_ideal(const NearnessSpace& space, ObjectSet ideal,
                        const StructureCandidate& ambient, Side side) {
    if (ideal.empty()) throw InputError("ideal must be nonempty");
    if (!ideal.subset_of(ambient.carrier)) {
        throw InputError("ideal is not contained in the ambient carrier");
    }
    const Context actx = make_context(space, ambient);
    const OpTable& add = op_of(actx, OpKind::add);
    const OpTable& mul = op_of(actx, OpKind::mul);
    const Universe& u = *actx.universe;
    AxiomReport rep;

    const auto zeros = identity_candidates(add, ambient.carrier, actx.upper);
    if (zeros.empty()) {
        throw StructuralError("additive near identity not found for the ambient carrier");
    }
    if (zeros.size() > 1) {
        rep.anomalies.push_back({"identity-not-unique",
                                 "distinct additive identities: " + join_labels(u, zeros)});
    }
    const std::size_t zero = zeros.front();

    std::vector<int> neg(u.size(), -1);
    std::string missing;
    nlohmann::json inverse_witness = nlohmann::json::object();
    ideal.for_each([&](std::size_t y) {
        const auto inv = inverse_candidates(add, y, ambient.carrier, zero);
        if (inv.empty() && missing.empty()) missing = u.label(y);
        if (!inv.empty()) {
            neg[y] = static_cast<int>(inv.front());
            inverse_witness[u.label(y)] = u.label(inv.front());
        }
        if (inv.size() > 1) {
            rep.anomalies.push_back({"inverse-not-unique",
                                     "element " + u.label(y) + " has inverses: " +
                                         join_labels(u, inv)});
        }
    });
    if (!missing.empty()) {
        throw StructuralError("element '" + missing + "' has no additive inverse in the carrier");
    }
    rep.witnesses["zero"] = u.label(zero);
    rep.witnesses["inverses"] = inverse_witness;

    const ObjectSet upper_ideal = space.upper_approx(ideal);
    rep.details["ideal"] = u.labels(ideal);
    rep.details["ideal_upper"] = u.labels(upper_ideal);

    bool diff_ok = true;
    ideal.for_each([&](std::size_t x) {
        ideal.for_each([&](std::size_t y) {
            const std::size_t d = add.at(x, static_cast<std::size_t>(neg[y]));
            if (!upper_ideal.contains(d)) {
                diff_ok = false;
                rep.add_counterexample({"difference-closure",
                                        "membership",
                                        {u.label(x), u.label(y)},
                                        u.label(d),
                                        "",
                                        "x-y outside the upper approximation of the ideal"});
            }
        });
    });
    rep.set("difference-closure", diff_ok ? Verdict::pass : Verdict::fail, false);

    bool left_ok = true, right_ok = true;
    if (side == Side::left || side == Side::two_sided) {
        ambient.carrier.for_each([&](std::size_t r) {
            ideal.for_each([&](std::size_t x) {
                const std::size_t p = mul.at(r, x);
                if (!upper_ideal.contains(p)) {
                    left_ok = false;
                    rep.add_counterexample({"left-absorption",
                                            "membership",
                                            {u.label(r), u.label(x)},
                                            u.label(p),
                                            "",
                                            ""});
                }
            });
        });
        rep.set("left-absorption", left_ok ? Verdict::pass : Verdict::fail, false);
    }
    if (side == Side::right || side == Side::two_sided) {
        ambient.carrier.for_each([&](std::size_t r) {
            ideal.for_each([&](std::size_t x) {
                const std::size_t p = mul.at(x, r);
                if (!upper_ideal.contains(p)) {
                    right_ok = false;
                    rep.add_counterexample({"right-absorption",
                                            "membership",
                                            {u.label(x), u.label(r)},
                                            u.label(p),
                                            "",
                                            ""});
                }
            });
        });
        rep.set("right-absorption", right_ok ? Verdict::pass : Verdict::fail, false);
    }
    rep.set("ideal", (diff_ok && left_ok && right_ok) ? Verdict::pass : Verdict::fail, true);
    return rep;
}

AxiomReport check_intersection_theorem(const NearnessSpace& space,
                                       std::span<const ObjectSet> parts,
                                       const StructureCandidate& ambient, IntersectionKind kind) {
    if (parts.empty()) throw InputError("intersection theorem requires at least one part");
    const Context actx = make_context(space, ambient);
    const OpTable& add = op_of(actx, OpKind::add);
    const OpTable& mul = op_of(actx, OpKind::mul);
    const Universe& u = *actx.universe;
    AxiomReport rep;

    auto run_check = [&](ObjectSet s) {
        return kind == IntersectionKind::subring
                   ? check_subnearness_ring(space, s, ambient)
                   : check_ideal(space, s, ambient, Side::two_sided);
    };

    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string axiom = "part-" + std::to_string(i + 1);
        AxiomReport part = run_check(parts[i]);
        rep.set(axiom, part.passed() ? Verdict::pass : Verdict::fail, false);
        const ObjectSet up = space.upper_approx(parts[i]);
        const bool grp = is_groupoid(up, add) && is_groupoid(up, mul);
        if (!part.passed() || !grp) {
            rep.set("intersection", Verdict::not_applicable, true);
            rep.details["reason"] = axiom + (grp ? " is not a verified part"
                                                 : " upper approximation is not a groupoid");
            return rep;
        }
    }

    ObjectSet inter = parts[0];
    ObjectSet inter_uppers = space.upper_approx(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        inter &= parts[i];
        inter_uppers &= space.upper_approx(parts[i]);
    }
    const ObjectSet upper_of_inter = space.upper_approx(inter);
    rep.details["intersection_set"] = u.labels(inter);
    rep.details["upper_intersection"] = u.labels(inter_uppers);
    rep.details["upper_of_intersection"] = u.labels(upper_of_inter);

    const bool side_condition = inter_uppers == upper_of_inter;
    rep.set("side-condition", side_condition ? Verdict::pass : Verdict::fail, false);
    if (!side_condition || inter.empty()) {
        rep.set("intersection", Verdict::not_applicable, true);
        rep.details["reason"] =
            inter.empty() ? "intersection is empty" : "side condition does not hold";
        return rep;
    }

    AxiomReport result = run_check(inter);
    rep.set("intersection", result.passed() ? Verdict::pass : Verdict::fail, true);
    if (!result.passed()) {
        rep.anomalies.push_back({"intersection-theorem-violation",
                                 "hypotheses hold but the intersection fails the check"});
        for (const auto& ce : result.counterexamples) rep.add_counterexample(ce);
    }
    return rep;
}

AxiomReport classify_units(const NearnessSpace& space, const StructureCandidate& cand) {
    const Context ctx = make_context(space, cand);
    const OpTable& add = op_of(ctx, OpKind::add);
    const OpTable& mul = op_of(ctx, OpKind::mul);
    const Universe& u = *ctx.universe;
    AxiomReport rep;

    AxiomReport ring = check_nearness_ring(ctx);
    const bool ring_ok = ring.verdict_is("NR1", Verdict::pass) &&
                         ring.verdict_is("NR2", Verdict::pass) &&
                         ring.verdict_is("NR3", Verdict::pass);
    rep.set("ring", ring_ok ? Verdict::pass : Verdict::fail, false);
    rep.set("NR5", ring.verdict("NR5"), false);

    if (!ring_ok || !ring.verdict_is("NR5", Verdict::pass)) {
        rep.set("division-ring", Verdict::not_applicable, false);
        rep.set("field", Verdict::not_applicable, false);
        rep.witnesses["units"] = nlohmann::json::array();
        rep.details["reason"] = ring_ok ? "NR5 fails: no multiplicative identity"
                                        : "candidate is not a nearness ring";
        return rep;
    }

    const std::size_t one = identity_candidates(mul, cand.carrier, ctx.upper).front();
    rep.witnesses["multiplicative_identity"] = u.label(one);

    nlohmann::json units = nlohmann::json::array();
    cand.carrier.for_each([&](std::size_t x) {
        bool left = false, right = false;
        ctx.upper.for_each([&](std::size_t y) {
            if (mul.at(y, x) == one) left = true;
            if (mul.at(x, y) == one) right = true;
        });
        if (left && right) units.push_back(u.label(x));
    });
    rep.witnesses["units"] = units;

    const auto zeros = identity_candidates(add, cand.carrier, ctx.upper);
    ObjectSet nonzero = cand.carrier;
    if (!zeros.empty() && nonzero.contains(zeros.front())) nonzero.erase(zeros.front());
    if (nonzero.empty()) {
        rep.set("division-ring", Verdict::not_applicable, false);
        rep.set("field", Verdict::not_applicable, false);
        return rep;
    }
    Context gctx = ctx;
    gctx.carrier = nonzero;
    gctx.upper = space.upper_approx(nonzero);
    AxiomReport ng = check_near_group(gctx, OpKind::mul);
    const bool division = ng.passed();
    rep.set("division-ring", division ? Verdict::pass : Verdict::fail, false);
    rep.set("field", (division && ng.verdict_is("abelian", Verdict::pass)) ? Verdict::pass
                                                                           : Verdict::fail,
            false);
    rep.absorb("nonzero-group", ng);
    return rep;
}

}  // namespace nearness::structures
