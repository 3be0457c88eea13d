#include <doctest.h>

#include <random>

#include "nearness/feature_system.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace nearness;

namespace {

NearnessSpace example_space() { return NearnessSpace(fixtures::example3_system()); }

ObjectSet from_oracle(const oracle::Set& s) {
    ObjectSet out;
    for (std::size_t i : s) out.insert(i);
    return out;
}

}  // namespace

TEST_CASE("object descriptions are probe-value tuples in probe order") {
    const NearnessSpace space = example_space();
    const Universe& u = space.universe();
    const std::vector<std::size_t> both = {0, 1};
    CHECK(space.describe(u.require("o"), both) == ObjectDescription{"alpha4", "beta1"});
    CHECK(space.describe(u.require("r"), both) == ObjectDescription{"alpha1", "beta2"});
    CHECK(space.describe(u.require("o"), {}) == ObjectDescription{});
    CHECK_THROWS_AS((void)u.require("nope"), InputError);
}

TEST_CASE("equivalence classes group objects with identical values") {
    const NearnessSpace space = example_space();
    const Universe& u = space.universe();
    const std::vector<std::size_t> phi1 = {0}, phi2 = {1};
    CHECK(space.equivalence_class(u.require("o"), phi1) == fixtures::named(u, {"o", "w"}));
    CHECK(space.equivalence_class(u.require("p"), phi2) ==
          fixtures::named(u, {"p", "s", "v", "x"}));

    FeatureSystem fs;
    fs.universe = Universe::from_ids({"a", "b", "c"});
    fs.probes.push_back(ProbeFunction{"phi", {"x", "y", "z"}});
    fs.r = 1;
    const NearnessSpace discrete(fs);
    CHECK(discrete.equivalence_class(1, std::vector<std::size_t>{0}) == ObjectSet::of({1}));
}

TEST_CASE("partitions cover the universe with disjoint classes") {
    const NearnessSpace space = example_space();
    const Universe& u = space.universe();
    const Partition p1 = space.partition(std::vector<std::size_t>{0});
    REQUIRE(p1.classes.size() == 4);
    CHECK(p1.classes[0] == fixtures::named(u, {"o", "w"}));
    CHECK(p1.classes[1] == fixtures::named(u, {"p", "s"}));
    CHECK(p1.classes[2] == fixtures::named(u, {"r", "t"}));
    CHECK(p1.classes[3] == fixtures::named(u, {"v", "x"}));

    const Partition p2 = space.partition(std::vector<std::size_t>{1});
    REQUIRE(p2.classes.size() == 3);
    CHECK(p2.classes[0] == fixtures::named(u, {"o", "w"}));
    CHECK(p2.classes[1] == fixtures::named(u, {"p", "s", "v", "x"}));
    CHECK(p2.classes[2] == fixtures::named(u, {"r", "t"}));

    FeatureSystem fs;
    fs.universe = Universe::from_ids({"a", "b", "c"});
    fs.probes.push_back(ProbeFunction{"phi", {"k", "k", "k"}});
    fs.r = 1;
    const NearnessSpace constant(fs);
    const Partition single = constant.partition(std::vector<std::size_t>{0});
    REQUIRE(single.classes.size() == 1);
    CHECK(single.classes[0] == constant.universe().full());
}

TEST_CASE("the partition family has one member per size-r probe subset") {
    const NearnessSpace space = example_space();
    CHECK(space.partitions_family().size() == 2);

    FeatureSystem fs = fixtures::example3_system();
    fs.r = 2;
    CHECK(NearnessSpace(fs).partitions_family().size() == 1);

    fs.probes.push_back(ProbeFunction{
        "phi3", {"g1", "g1", "g2", "g2", "g3", "g3", "g4", "g4"}});
    fs.r = 2;
    CHECK(NearnessSpace(fs).partitions_family().size() == 3);
}

TEST_CASE("lower and upper approximations on the eight-object system") {
    const NearnessSpace space = example_space();
    const Universe& u = space.universe();
    const ObjectSet big = fixtures::named(u, {"r", "t", "w"});
    const ObjectSet small = fixtures::named(u, {"r", "w"});

    CHECK(space.lower_approx(big) == fixtures::named(u, {"r", "t"}));
    CHECK(space.lower_approx(u.full()) == u.full());
    CHECK(space.lower_approx(ObjectSet{}) == ObjectSet{});

    CHECK(space.upper_approx(big) == fixtures::named(u, {"o", "r", "t", "w"}));
    CHECK(space.upper_approx(small) == fixtures::named(u, {"o", "r", "t", "w"}));
    CHECK(space.upper_approx(ObjectSet{}) == ObjectSet{});

    CHECK(space.boundary(big) == fixtures::named(u, {"o", "w"}));
    CHECK(space.boundary(u.full()) == ObjectSet{});
    CHECK(space.boundary(ObjectSet{}) == ObjectSet{});
}

TEST_CASE("overlap is the Jaccard ratio with 1 on two empty sets") {
    const NearnessSpace space = example_space();
    const Universe& u = space.universe();
    const ObjectSet rt = fixtures::named(u, {"r", "t"});
    const ObjectSet ow = fixtures::named(u, {"o", "w"});
    const ObjectSet rtw = fixtures::named(u, {"r", "t", "w"});
    CHECK(space.overlap(rtw, rtw) == Rational{1, 1});
    CHECK(space.overlap(rt, ow) == Rational{0, 1});
    CHECK(space.overlap(rt, rtw) == Rational{2, 3});
    CHECK(space.overlap(ObjectSet{}, ObjectSet{}) == Rational{1, 1});
}

TEST_CASE("approximation invariants hold on random feature systems") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        FeatureSystem fs;
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
        fs.universe = Universe::from_ids(ids);
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t p = 0; p < k; ++p) {
            ProbeFunction probe;
            probe.name = "phi" + std::to_string(p);
            for (std::size_t i = 0; i < n; ++i) {
                probe.values.push_back("v" + std::to_string(rng() % n));
            }
            fs.probes.push_back(std::move(probe));
        }
        fs.r = 1 + rng() % k;

        oracle::Input in;
        in.objects = ids;
        for (const auto& probe : fs.probes) in.probes.push_back(probe.values);
        in.r = fs.r;

        const NearnessSpace space(fs);
        for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
            const ObjectSet x = ObjectSet::from_bits(bits);
            const ObjectSet lower = space.lower_approx(x);
            const ObjectSet upper = space.upper_approx(x);
            CHECK(lower.subset_of(x));
            CHECK(x.subset_of(upper));
            CHECK((space.boundary(x) | lower) == upper);
            CHECK((space.boundary(x) & lower) == ObjectSet{});

            oracle::Set ox;
            x.for_each([&](std::size_t i) { ox.insert(i); });
            CHECK(upper == from_oracle(oracle::upper_approx(in, ox)));
            CHECK(lower == from_oracle(oracle::lower_approx(in, ox)));
        }
        // Monotonicity on nested pairs.
        for (int inner = 0; inner < 10; ++inner) {
            const ObjectSet y = ObjectSet::from_bits(rng() % (1ull << n));
            ObjectSet x = y;
            y.for_each([&](std::size_t i) {
                if (rng() % 2 == 0) x.erase(i);
            });
            CHECK(space.upper_approx(x).subset_of(space.upper_approx(y)));
            CHECK(space.lower_approx(x).subset_of(space.lower_approx(y)));
        }
        // Every family partition: pairwise disjoint classes covering O.
        for (const Partition& part : space.partitions_family()) {
            ObjectSet seen;
            for (const ObjectSet cls : part.classes) {
                CHECK_FALSE(cls.empty());
                CHECK_FALSE(cls.intersects(seen));
                seen |= cls;
            }
            CHECK(seen == space.universe().full());
        }
        // Class symmetry: y in [x] iff x in [y].
        std::vector<std::size_t> all_probes;
        for (std::size_t p = 0; p < k; ++p) all_probes.push_back(p);
        for (std::size_t x = 0; x < n; ++x) {
            const ObjectSet cls = space.equivalence_class(x, all_probes);
            CHECK(cls.contains(x));
            cls.for_each([&](std::size_t y) {
                CHECK(space.equivalence_class(y, all_probes).contains(x));
            });
        }
    }
}

TEST_CASE("feature systems reject invalid inputs") {
    FeatureSystem fs = fixtures::example3_system();
    fs.r = 3;
    CHECK_THROWS_AS((void)NearnessSpace{fs}, InputError);
    fs.r = 0;
    CHECK_THROWS_AS((void)NearnessSpace{fs}, InputError);
    fs = fixtures::example3_system();
    fs.probes[0].values.pop_back();
    CHECK_THROWS_AS((void)NearnessSpace{fs}, InputError);
    fs = fixtures::example3_system();
    fs.probes.clear();
    CHECK_THROWS_AS((void)NearnessSpace{fs}, InputError);
}
