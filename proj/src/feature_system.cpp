#include "nearness/feature_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nearness {

namespace {

// C(n, k) saturating at limit+1 to keep the guard cheap.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t limit) {
    if (k > n) return 0;
    std::size_t acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > limit) return limit + 1;
    }
    return acc;
}

constexpr std::size_t kSubsetFamilyLimit = 10000;

void emit_subsets(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    cur.reserve(r);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

NearnessSpace::NearnessSpace(FeatureSystem fs) : fs_(std::move(fs)) {
    const std::size_t n = fs_.universe.size();
    if (fs_.probes.empty()) throw InputError("feature system has no probe functions");
    if (fs_.r < 1 || fs_.r > fs_.probes.size()) {
        throw InputError("r must satisfy 1 <= r <= " + std::to_string(fs_.probes.size()));
    }
    for (const auto& p : fs_.probes) {
        if (p.values.size() != n) {
            throw InputError("probe '" + p.name + "' is not total over the universe");
        }
    }
    if (binomial_capped(fs_.probes.size(), fs_.r, kSubsetFamilyLimit) > kSubsetFamilyLimit) {
        throw ResourceError("partition family C(|B|, r) exceeds " +
                            std::to_string(kSubsetFamilyLimit));
    }

    std::vector<std::vector<std::size_t>> subsets;
    emit_subsets(fs_.probes.size(), fs_.r, subsets);
    family_.reserve(subsets.size());
    for (const auto& s : subsets) {
        family_.push_back(partition(s));
        for (const auto& cls : family_.back().classes) family_classes_.push_back(cls);
    }

    // Full-B description ids, assigned in object order of first occurrence.
    std::map<ObjectDescription, std::size_t> seen;
    desc_id_.resize(n);
    std::vector<std::size_t> all_probes(fs_.probes.size());
    std::iota(all_probes.begin(), all_probes.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ObjectDescription d = describe(i, all_probes);
        auto [it, inserted] = seen.emplace(std::move(d), desc_repr_.size());
        if (inserted) desc_repr_.push_back(i);
        desc_id_[i] = it->second;
    }
}

std::size_t NearnessSpace::probe_index(std::string_view name) const {
    for (std::size_t i = 0; i < fs_.probes.size(); ++i) {
        if (fs_.probes[i].name == name) return i;
    }
    throw InputError("unknown probe function '" + std::string(name) + "'");
}

ObjectDescription NearnessSpace::describe(std::size_t obj,
                                          std::span<const std::size_t> probes) const {
    if (obj >= fs_.universe.size()) throw InputError("object index out of range");
    ObjectDescription d;
    d.reserve(probes.size());
    for (std::size_t p : probes) {
        if (p >= fs_.probes.size()) throw InputError("probe index out of range");
        d.push_back(fs_.probes[p].values[obj]);
    }
    return d;
}

ObjectSet NearnessSpace::equivalence_class(std::size_t obj,
                                           std::span<const std::size_t> probes) const {
    if (obj >= fs_.universe.size()) throw InputError("object index out of range");
    if (probes.empty()) throw InputError("equivalence class requires a nonempty probe subset");
    ObjectSet cls;
    for (std::size_t other = 0; other < fs_.universe.size(); ++other) {
        bool same = true;
        for (std::size_t p : probes) {
            if (p >= fs_.probes.size()) throw InputError("probe index out of range");
            if (fs_.probes[p].values[other] != fs_.probes[p].values[obj]) {
                same = false;
                break;
            }
        }
        if (same) cls.insert(other);
    }
    return cls;
}

Partition NearnessSpace::partition(std::span<const std::size_t> probes) const {
    if (probes.empty()) throw InputError("partition requires a nonempty probe subset");
    Partition part;
    part.source.assign(probes.begin(), probes.end());
    ObjectSet remaining = fs_.universe.full();
    while (!remaining.empty()) {
        std::size_t rep = remaining.first();
        ObjectSet cls = equivalence_class(rep, probes);
        part.classes.push_back(cls);
        remaining = remaining - cls;
    }
    return part;
}

ObjectSet NearnessSpace::lower_approx(ObjectSet x) const {
    ObjectSet out;
    for (ObjectSet cls : family_classes_) {
        if (cls.subset_of(x)) out |= cls;
    }
    return out;
}

ObjectSet NearnessSpace::upper_approx(ObjectSet x) const {
    ObjectSet out;
    for (ObjectSet cls : family_classes_) {
        if (cls.intersects(x)) out |= cls;
    }
    return out;
}

ObjectSet NearnessSpace::boundary(ObjectSet x) const {
    return upper_approx(x) - lower_approx(x);
}

Rational NearnessSpace::overlap(ObjectSet x, ObjectSet y) const {
    const std::size_t uni = (x | y).size();
    if (uni == 0) return Rational{1, 1};
    const std::size_t inter = (x & y).size();
    const std::int64_t g = std::gcd<std::int64_t>(inter, uni);
    if (inter == 0) return Rational{0, 1};
    return Rational{static_cast<std::int64_t>(inter) / g, static_cast<std::int64_t>(uni) / g};
}

ObjectDescription NearnessSpace::description_tuple(std::size_t desc_id) const {
    std::vector<std::size_t> all_probes(fs_.probes.size());
    std::iota(all_probes.begin(), all_probes.end(), 0);
    return describe(desc_repr_.at(desc_id), all_probes);
}

std::uint64_t NearnessSpace::description_mask(ObjectSet a) const {
    std::uint64_t mask = 0;
    a.for_each([&](std::size_t i) { mask |= (1ull << desc_id_[i]); });
    return mask;
}

}  // namespace nearness
