#include "nearness/descriptive.hpp"

namespace nearness::descriptive {

std::set<ObjectDescription> set_description(const NearnessSpace& space, ObjectSet a) {
    std::set<ObjectDescription> out;
    std::uint64_t mask = space.description_mask(a);
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
        out.insert(space.description_tuple(static_cast<std::size_t>(std::countr_zero(b))));
    }
    return out;
}

ObjectSet descriptive_intersection(const NearnessSpace& space, ObjectSet a, ObjectSet b) {
    const std::uint64_t qa = space.description_mask(a);
    const std::uint64_t qb = space.description_mask(b);
    const std::uint64_t both = qa & qb;
    ObjectSet out;
    (a | b).for_each([&](std::size_t x) {
        if ((both >> space.description_id(x)) & 1u) out.insert(x);
    });
    return out;
}

bool is_descriptively_near(const NearnessSpace& space, ObjectSet a, ObjectSet b) {
    return (space.description_mask(a) & space.description_mask(b)) != 0;
}

NearnessCollection nearness_collection(const NearnessSpace& space, ObjectSet a,
                                       std::span<const ObjectSet> candidates) {
    NearnessCollection col;
    col.anchor = a;
    const std::uint64_t qa = space.description_mask(a);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((qa & space.description_mask(candidates[i])) != 0) {
            col.members.push_back(candidates[i]);
            col.member_index.push_back(i);
        }
    }
    return col;
}

NearnessCollection nearness_collection(const NearnessSpace& space, ObjectSet a,
                                       std::size_t powerset_bound) {
    auto candidates = powerset(space, powerset_bound);
    return nearness_collection(space, a, candidates);
}

std::vector<ObjectSet> family_upper_approx(const NearnessSpace& space,
                                           std::span<const ObjectSet> family,
                                           std::span<const ObjectSet> candidates) {
    if (family.empty()) throw InputError("family upper approximation requires a nonempty family");
    std::uint64_t family_mask = 0;
    for (ObjectSet member : family) family_mask |= space.description_mask(member);
    std::vector<ObjectSet> out;
    for (ObjectSet cand : candidates) {
        if ((space.description_mask(cand) & family_mask) != 0) out.push_back(cand);
    }
    return out;
}

std::vector<ObjectSet> family_upper_approx(const NearnessSpace& space,
                                           std::span<const ObjectSet> family,
                                           std::size_t powerset_bound) {
    auto candidates = powerset(space, powerset_bound);
    return family_upper_approx(space, family, candidates);
}

std::vector<ObjectSet> powerset(const NearnessSpace& space, std::size_t bound) {
    const std::size_t n = space.universe().size();
    if (n > bound) {
        throw ResourceError("powerset of a " + std::to_string(n) +
                            "-object universe exceeds the bound of " + std::to_string(bound));
    }
    std::vector<ObjectSet> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        out.push_back(ObjectSet::from_bits(bits));
    }
    return out;
}

}  // namespace nearness::descriptive
