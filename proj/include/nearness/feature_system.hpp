#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nearness/object_set.hpp"

namespace nearness {

// A probe assigns every object of the universe exactly one feature value.
// Values are opaque symbols compared by exact equality.
struct ProbeFunction {
    std::string name;
    std::vector<std::string> values;  // values[i] belongs to object i
};

struct FeatureSystem {
    Universe universe;
    std::vector<ProbeFunction> probes;
    std::size_t r = 1;  // 1 <= r <= probes.size()
};

// Tuple of probe values in probe order.
using ObjectDescription = std::vector<std::string>;

struct Partition {
    std::vector<ObjectSet> classes;   // disjoint, cover the universe; ordered by least member
    std::vector<std::size_t> source;  // indices of the probes generating it
};

// Reduced fraction in [0, 1].
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Precomputed nearness approximation space: the partition family N_r(B)
// (one partition per size-r probe subset) plus full-B description identity.
class NearnessSpace {
public:
    explicit NearnessSpace(FeatureSystem fs);

    const Universe& universe() const { return fs_.universe; }
    const FeatureSystem& system() const { return fs_; }

    std::size_t probe_index(std::string_view name) const;

    ObjectDescription describe(std::size_t obj, std::span<const std::size_t> probes) const;
    ObjectSet equivalence_class(std::size_t obj, std::span<const std::size_t> probes) const;
    Partition partition(std::span<const std::size_t> probes) const;

    // One partition per size-r subset of B, in lexicographic subset order.
    const std::vector<Partition>& partitions_family() const { return family_; }

    ObjectSet lower_approx(ObjectSet x) const;
    ObjectSet upper_approx(ObjectSet x) const;
    ObjectSet boundary(ObjectSet x) const;

    // Jaccard overlap |X∩Y| / |X∪Y|; 1 when both sets are empty.
    Rational overlap(ObjectSet x, ObjectSet y) const;

    // Full-B description identity: objects with equal descriptions share an id.
    std::size_t description_id(std::size_t obj) const { return desc_id_[obj]; }
    std::size_t description_count() const { return desc_repr_.size(); }
    ObjectDescription description_tuple(std::size_t desc_id) const;

    // Q(A) as a bitmask over description ids.
    std::uint64_t description_mask(ObjectSet a) const;

private:
    FeatureSystem fs_;
    std::vector<Partition> family_;
    std::vector<ObjectSet> family_classes_;  // flattened classes of every family partition
    std::vector<std::size_t> desc_id_;       // per object
    std::vector<std::size_t> desc_repr_;     // first object carrying each description id
};

}  // namespace nearness
