#pragma once

#include <set>
#include <span>
#include <vector>

#include "nearness/feature_system.hpp"

namespace nearness::descriptive {

inline constexpr std::size_t kDefaultPowersetBound = 16;

// Q(A): the set of full-B descriptions of the members of A, duplicates collapsed.
std::set<ObjectDescription> set_description(const NearnessSpace& space, ObjectSet a);

// {x in A∪B | Φ(x) ∈ Q(A) and Φ(x) ∈ Q(B)}.
ObjectSet descriptive_intersection(const NearnessSpace& space, ObjectSet a, ObjectSet b);

// A δ_Φ B: the description sets intersect.
bool is_descriptively_near(const NearnessSpace& space, ObjectSet a, ObjectSet b);

struct NearnessCollection {
    ObjectSet anchor;
    std::vector<ObjectSet> members;        // candidates descriptively near the anchor
    std::vector<std::size_t> member_index; // positions within the candidate family
};

NearnessCollection nearness_collection(const NearnessSpace& space, ObjectSet a,
                                       std::span<const ObjectSet> candidates);

// Candidates default to the full powerset, refused above the bound.
NearnessCollection nearness_collection(const NearnessSpace& space, ObjectSet a,
                                       std::size_t powerset_bound = kDefaultPowersetBound);

// Upper approximation of a family of sets: every candidate descriptively
// near some family member. Candidate order is preserved.
std::vector<ObjectSet> family_upper_approx(const NearnessSpace& space,
                                           std::span<const ObjectSet> family,
                                           std::span<const ObjectSet> candidates);

std::vector<ObjectSet> family_upper_approx(const NearnessSpace& space,
                                           std::span<const ObjectSet> family,
                                           std::size_t powerset_bound = kDefaultPowersetBound);

// All subsets of the universe, in ascending bitmask order.
std::vector<ObjectSet> powerset(const NearnessSpace& space,
                                std::size_t bound = kDefaultPowersetBound);

}  // namespace nearness::descriptive
