#include <doctest.h>

#include "nearness/morphisms.hpp"
#include "support/fixtures.hpp"

using namespace nearness;
namespace mo = nearness::morphisms;
namespace st = nearness::structures;

namespace {

struct Example {
    NearnessSpace space;
    OpTable add;
    OpTable mul;
    Example()
        : space(fixtures::example3_system()),
          add(fixtures::example3_add()),
          mul(fixtures::example3_mul()) {}

    ObjectSet named(const std::vector<std::string>& ids) const {
        return fixtures::named(space.universe(), ids);
    }
    StructureCandidate R() const { return StructureCandidate{named({"r", "t", "w"}), &add, &mul}; }
    std::size_t idx(const std::string& id) const { return space.universe().require(id); }
};

struct Zmod {
    NearnessSpace space;
    OpTable add;
    OpTable mul;
    explicit Zmod(std::size_t k)
        : space(fixtures::zmod_system(k)),
          add(fixtures::zmod_add(k)),
          mul(fixtures::zmod_mul(k)) {}
    StructureCandidate whole() const {
        return StructureCandidate{space.universe().full(), &add, &mul};
    }
};

mo::MappingTable table_map(const mo::HomEnv& env, const std::vector<int>& entries) {
    mo::MappingTable m;
    m.entries = entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] >= 0) m.domain.insert(i);
    }
    m.codomain = env.to.upper;
    return m;
}

// z4 -> z2 reduction mod 2.
struct Mod2Fixture {
    Zmod z4{4};
    Zmod z2{2};
    mo::HomEnv env;
    mo::MappingTable m;
    Mod2Fixture() : env(mo::make_env(z4.space, z4.whole(), z2.space, z2.whole())) {
        m = table_map(env, {0, 1, 0, 1});
    }
};

}  // namespace

TEST_CASE("the identity map on a carrier is a nearness isomorphism") {
    const Example ex;
    mo::HomEnv env = mo::make_env(ex.space, ex.R(), ex.space, ex.R());
    std::vector<int> id(8, -1);
    env.from.upper.for_each([&](std::size_t x) { id[x] = static_cast<int>(x); });
    const mo::MappingTable m = table_map(env, id);
    const AxiomReport rep = mo::check_nearness_hom(m, env);
    CHECK(rep.passed());
    CHECK(rep.verdict_is("iso", Verdict::pass));
    CHECK(mo::check_nearness_hom(m, env, /*strict=*/true).passed());
}

TEST_CASE("a collapsing self-map breaks the additive law") {
    const Example ex;
    mo::HomEnv env = mo::make_env(ex.space, ex.R(), ex.space, ex.R());
    std::vector<int> entries(8, -1);
    entries[ex.idx("o")] = static_cast<int>(ex.idx("o"));
    entries[ex.idx("r")] = static_cast<int>(ex.idx("t"));
    entries[ex.idx("t")] = static_cast<int>(ex.idx("t"));
    entries[ex.idx("w")] = static_cast<int>(ex.idx("t"));
    const mo::MappingTable m = table_map(env, entries);
    const AxiomReport rep = mo::check_nearness_hom(m, env);
    CHECK(rep.verdict_is("add-law", Verdict::fail));
    bool found_rt = false;
    for (const auto& ce : rep.counterexamples) {
        if (ce.axiom == "add-law" && ce.tuple == std::vector<std::string>{"r", "t"}) {
            found_rt = true;
            CHECK(ce.lhs == "t");
            CHECK(ce.rhs == "o");
        }
    }
    CHECK(found_rt);

    // Restricted to {t} the laws only bind on t+t and t·t, which survive.
    CHECK(mo::check_restricted_hom(m, ex.named({"t"}), env).passed());
}

TEST_CASE("mapping validation reports gaps and escaped images") {
    const Example ex;
    mo::HomEnv env = mo::make_env(ex.space, ex.R(), ex.space, ex.R());
    std::vector<int> partial(8, -1);
    partial[ex.idx("r")] = static_cast<int>(ex.idx("r"));
    CHECK_THROWS_AS(mo::check_nearness_hom(table_map(env, partial), env), InputError);

    std::vector<int> escaped(8, -1);
    env.from.upper.for_each([&](std::size_t x) { escaped[x] = static_cast<int>(ex.idx("p")); });
    CHECK_THROWS_AS(mo::check_nearness_hom(table_map(env, escaped), env), InputError);
}

TEST_CASE("kernels collect the preimage of the additive identity") {
    Mod2Fixture fx;
    CHECK(mo::kernel(fx.m, fx.env) == ObjectSet::of({0, 2}));

    const Zmod z4(4);
    mo::HomEnv env = mo::make_env(z4.space, z4.whole(), z4.space, z4.whole());
    const mo::MappingTable id = table_map(env, {0, 1, 2, 3});
    CHECK(mo::kernel(id, env) == ObjectSet::of({0}));
}

TEST_CASE("homomorphism properties: zero and inverse preservation") {
    Mod2Fixture fx;
    REQUIRE(mo::check_nearness_hom(fx.m, fx.env).passed());
    const AxiomReport rep = mo::check_hom_properties(fx.m, fx.env);
    CHECK(rep.verdict_is("zero-preservation", Verdict::pass));
    CHECK(rep.verdict_is("inverse-preservation", Verdict::pass));
}

TEST_CASE("image of a subring is a subring when approximation commutes") {
    Mod2Fixture fx;
    const AxiomReport rep = mo::check_image_subring(fx.z4.space, fx.z2.space, fx.m,
                                                    ObjectSet::of({0, 2}), fx.z4.whole(),
                                                    fx.z2.whole());
    CHECK(rep.verdict_is("commutation", Verdict::pass));
    CHECK(rep.verdict_is("image-subring", Verdict::pass));

    const Example ex;
    mo::HomEnv env = mo::make_env(ex.space, ex.R(), ex.space, ex.R());
    std::vector<int> id(8, -1);
    env.from.upper.for_each([&](std::size_t x) { id[x] = static_cast<int>(x); });
    const AxiomReport rep2 = mo::check_image_subring(ex.space, ex.space, table_map(env, id),
                                                     ex.named({"r", "w"}), ex.R(), ex.R());
    CHECK(rep2.verdict_is("image-subring", Verdict::pass));
}

TEST_CASE("a description-collapsing map leaves the image condition not applicable") {
    // Domain side separates a and b; codomain side identifies u and v
    // descriptively, so eta(N*(S)) = {u} while N*(eta(S)) = {u, v}.
    FeatureSystem fs1;
    fs1.universe = Universe::from_ids({"a", "b"});
    fs1.probes.push_back(ProbeFunction{"f", {"x", "y"}});
    fs1.r = 1;
    const NearnessSpace s1{fs1};
    const OpTable add1 = fixtures::zmod_add(2);
    const OpTable mul1 = fixtures::zmod_mul(2);
    const StructureCandidate r1{s1.universe().full(), &add1, &mul1};

    FeatureSystem fs2;
    fs2.universe = Universe::from_ids({"u", "v"});
    fs2.probes.push_back(ProbeFunction{"f", {"same", "same"}});
    fs2.r = 1;
    const NearnessSpace s2{fs2};
    const OpTable add2 = fixtures::zmod_add(2);
    const OpTable mul2 = fixtures::zmod_mul(2);
    const StructureCandidate r2{s2.universe().full(), &add2, &mul2};

    mo::HomEnv env = mo::make_env(s1, r1, s2, r2);
    const mo::MappingTable m = table_map(env, {0, 1});
    const AxiomReport rep =
        mo::check_image_subring(s1, s2, m, ObjectSet::of({0}), r1, r2);
    CHECK(rep.verdict_is("commutation", Verdict::fail));
    CHECK(rep.verdict_is("image-subring", Verdict::not_applicable));
}

TEST_CASE("kernels of homomorphisms are two-sided ideals") {
    Mod2Fixture fx;
    const AxiomReport rep = mo::check_kernel_ideal(fx.z4.space, fx.m, fx.z4.whole(), fx.env);
    CHECK(rep.verdict_is("kernel-ideal", Verdict::pass));

    const Zmod z4(4);
    mo::HomEnv env = mo::make_env(z4.space, z4.whole(), z4.space, z4.whole());
    const mo::MappingTable id = table_map(env, {0, 1, 2, 3});
    CHECK(mo::check_kernel_ideal(z4.space, id, z4.whole(), env)
              .verdict_is("kernel-ideal", Verdict::pass));
}

TEST_CASE("the natural map into the weak-coset quotient is a homomorphism") {
    const Example ex;
    const mo::NaturalHom nh = mo::natural_hom(ex.space, ex.R(), ex.named({"r", "w"}), "S");
    CHECK(nh.hom.passed());

    const auto& q = nh.quotient;
    auto coset_of = [&](const std::string& x) { return nh.map.at(ex.idx(x)); };
    CHECK(q.coset_label(coset_of("r")) == "r+S");
    CHECK(q.coset_label(coset_of("o")) == "o+S");

    // Pi(r+t) = Pi(w) = w+S = (r+S) ⊕ (t+S); Pi(t·t) = Pi(o) = o+S = (t+S) ⊙ (t+S).
    CHECK(coset_of("w") == q.sum.at(ex.idx("r"), ex.idx("t")));
    CHECK(coset_of("o") == q.product.at(ex.idx("t"), ex.idx("t")));

    // The kernel of Pi is empty: no carrier element maps to o+S.
    mo::HomEnv env{st::make_context(ex.space, ex.R()), q.coset_context()};
    CHECK(mo::kernel(nh.map, env) == ObjectSet{});
    CHECK(mo::check_kernel_ideal(ex.space, nh.map, ex.R(), env)
              .verdict_is("kernel-ideal", Verdict::not_applicable));

    const AxiomReport props = mo::check_hom_properties(nh.map, env);
    CHECK(props.verdict_is("zero-preservation", Verdict::pass));
    CHECK(props.verdict_is("inverse-preservation", Verdict::pass));
}

TEST_CASE("restricted homomorphisms bind only on the designated subset") {
    Mod2Fixture fx;
    CHECK(mo::check_restricted_hom(fx.m, ObjectSet::of({0, 2}), fx.env).passed());
    CHECK(mo::check_restricted_hom(fx.m, fx.z4.space.universe().full(), fx.env).passed());
    CHECK_THROWS_AS(mo::check_restricted_hom(fx.m, ObjectSet{}, fx.env), InputError);
}

TEST_CASE("first isomorphism check on the mod-2 reduction") {
    Mod2Fixture fx;
    const mo::FirstIsoResult res =
        mo::first_iso_check(fx.z4.space, fx.z2.space, fx.m, fx.z4.whole(), fx.z2.whole());
    CHECK(res.report.passed());
    CHECK(res.report.verdict_is("iso", Verdict::pass));
    CHECK(res.kernel_set == ObjectSet::of({0, 2}));
    CHECK(res.image == ObjectSet::of({0, 1}));
    REQUIRE(res.quotient.has_value());
    // eta maps member-set classes {0,2} -> z0 and {1,3} -> z1.
    CHECK(res.eta[0] == 0);
    CHECK(res.eta[2] == 0);
    CHECK(res.eta[1] == 1);
    CHECK(res.eta[3] == 1);
}

TEST_CASE("first isomorphism check on the identity of an ordinary ring") {
    const Zmod z2(2);
    mo::HomEnv env = mo::make_env(z2.space, z2.whole(), z2.space, z2.whole());
    const mo::MappingTable id = table_map(env, {0, 1});
    const mo::FirstIsoResult res =
        mo::first_iso_check(z2.space, z2.space, id, z2.whole(), z2.whole());
    CHECK(res.report.passed());
    CHECK(res.kernel_set == ObjectSet::of({0}));
}

TEST_CASE("first isomorphism check names a failing image condition") {
    // Domain: the subring {z0, z2} of the mod-4 ring with separating probes.
    // Codomain: the mod-2 ring with a single-class feature partition, so
    // N*(chi(R1)) = {z0, z1} strictly exceeds chi(N*(R1)) = {z0}.
    const Zmod z4(4);
    const NearnessSpace indiscrete2(fixtures::zmod_system(2, /*indiscrete=*/true));
    const OpTable add2 = fixtures::zmod_add(2);
    const OpTable mul2 = fixtures::zmod_mul(2);
    const StructureCandidate r1{ObjectSet::of({0, 2}), &z4.add, &z4.mul};
    const StructureCandidate r2{indiscrete2.universe().full(), &add2, &mul2};

    mo::HomEnv env = mo::make_env(z4.space, r1, indiscrete2, r2);
    std::vector<int> entries(4, -1);
    entries[0] = 0;
    entries[2] = 0;
    const mo::MappingTable m = table_map(env, entries);

    const mo::FirstIsoResult res = mo::first_iso_check(z4.space, indiscrete2, m, r1, r2);
    CHECK(res.report.verdict_is("iso", Verdict::not_applicable));
    CHECK(res.report.verdict_is("image-condition", Verdict::fail));
}

TEST_CASE("first isomorphism check is not applicable for a non-homomorphism") {
    const Example ex;
    mo::HomEnv env = mo::make_env(ex.space, ex.R(), ex.space, ex.R());
    std::vector<int> entries(8, -1);
    entries[ex.idx("o")] = static_cast<int>(ex.idx("o"));
    entries[ex.idx("r")] = static_cast<int>(ex.idx("t"));
    entries[ex.idx("t")] = static_cast<int>(ex.idx("t"));
    entries[ex.idx("w")] = static_cast<int>(ex.idx("t"));
    const mo::MappingTable m = table_map(env, entries);
    const mo::FirstIsoResult res = mo::first_iso_check(ex.space, ex.space, m, ex.R(), ex.R());
    CHECK(res.report.verdict_is("iso", Verdict::not_applicable));
    CHECK(res.report.details.at("failed_hypothesis") ==
          "chi is not a nearness ring homomorphism");
}

TEST_CASE("first isomorphism check is not applicable when the kernel is empty") {
    const Example ex;
    const mo::NaturalHom nh = mo::natural_hom(ex.space, ex.R(), ex.named({"r", "w"}), "S");
    // Treat the coset space as R2 via the quotient context.
    const StructureCandidate r2{nh.quotient.base.reps, &nh.quotient.sum, &nh.quotient.product};
    FeatureSystem coset_fs;
    coset_fs.universe = nh.quotient.coset_universe;
    coset_fs.probes.push_back(ProbeFunction{"f", std::vector<std::string>(8, "same")});
    coset_fs.r = 1;
    const NearnessSpace coset_space{coset_fs};
    const mo::FirstIsoResult res =
        mo::first_iso_check(ex.space, coset_space, nh.map, ex.R(), r2);
    CHECK(res.report.verdict_is("iso", Verdict::not_applicable));
    CHECK(res.report.details.at("failed_hypothesis") == "kernel is empty");
}
