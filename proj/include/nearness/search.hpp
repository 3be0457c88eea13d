#pragma once

#include <cstdint>

#include <json.hpp>

namespace nearness::io {

// Small-structure search: enumerates or samples feature assignments and
// operation-table pairs over n objects, reporting carriers that form
// nearness rings while (O, +, ·) is not an ordinary ring, plus every near
// group encountered (with the near-group theorem suite re-verified on each).
struct SearchOptions {
    std::size_t size = 3;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::size_t samples = 2000;       // random mode
    std::size_t max_exemplars = 8;
};

inline constexpr std::size_t kMaxSearchSize = 5;
inline constexpr std::size_t kMaxExhaustiveSize = 3;

nlohmann::json search_structures(const SearchOptions& opts);

}  // namespace nearness::io
