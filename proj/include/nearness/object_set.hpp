#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nearness/errors.hpp"

namespace nearness {

// Objects are dense indices into a universe; universes are capped at 64
// objects so subsets fit in one machine word.
inline constexpr std::size_t kMaxUniverse = 64;

class ObjectSet {
public:
    constexpr ObjectSet() = default;

    static constexpr ObjectSet from_bits(std::uint64_t bits) {
        ObjectSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr ObjectSet full(std::size_t n) {
        return from_bits(n >= 64 ? ~0ull : ((1ull << n) - 1));
    }

    static ObjectSet of(std::initializer_list<std::size_t> indices) {
        ObjectSet s;
        for (std::size_t i : indices) s.insert(i);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    void insert(std::size_t i) { bits_ |= (1ull << i); }
    void erase(std::size_t i) { bits_ &= ~(1ull << i); }

    constexpr bool subset_of(ObjectSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ObjectSet other) const { return (bits_ & other.bits_) != 0; }

    // Lowest index; only valid on a nonempty set.
    std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Visits members in ascending index order (the canonical order).
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(static_cast<std::size_t>(std::countr_zero(b)));
        }
    }

    friend constexpr ObjectSet operator|(ObjectSet a, ObjectSet b) {
        return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr ObjectSet operator&(ObjectSet a, ObjectSet b) {
        return from_bits(a.bits_ & b.bits_);
    }
    friend constexpr ObjectSet operator-(ObjectSet a, ObjectSet b) {
        return from_bits(a.bits_ & ~b.bits_);
    }
    ObjectSet& operator|=(ObjectSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    ObjectSet& operator&=(ObjectSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    friend constexpr bool operator==(ObjectSet a, ObjectSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(ObjectSet a, ObjectSet b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

struct Universe {
    std::vector<std::string> ids;  // canonical order
    std::unordered_map<std::string, std::size_t> index;

    static Universe from_ids(std::vector<std::string> ids) {
        if (ids.size() > kMaxUniverse) {
            throw InputError("universe exceeds " + std::to_string(kMaxUniverse) + " objects");
        }
        Universe u;
        u.ids = std::move(ids);
        for (std::size_t i = 0; i < u.ids.size(); ++i) {
            if (!u.index.emplace(u.ids[i], i).second) {
                throw InputError("duplicate object id '" + u.ids[i] + "'");
            }
        }
        return u;
    }

    std::size_t size() const { return ids.size(); }
    ObjectSet full() const { return ObjectSet::full(size()); }

    std::size_t require(std::string_view id) const {
        auto it = index.find(std::string(id));
        if (it == index.end()) throw InputError("unknown object id '" + std::string(id) + "'");
        return it->second;
    }

    const std::string& label(std::size_t i) const { return ids.at(i); }

    std::vector<std::string> labels(ObjectSet s) const {
        std::vector<std::string> out;
        out.reserve(s.size());
        s.for_each([&](std::size_t i) { out.push_back(label(i)); });
        return out;
    }

    ObjectSet set_of(const std::vector<std::string>& names) const {
        ObjectSet s;
        for (const auto& n : names) s.insert(require(n));
        return s;
    }
};

}  // namespace nearness
