#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace majority {

// A subset of {1..n}, index i stored in bit i-1.
using subset = std::uint32_t;

inline constexpr int max_indices = 30;

constexpr subset singleton(int i) { return subset{1} << (i - 1); }

constexpr subset pair_of(int i, int j) { return singleton(i) | singleton(j); }

constexpr subset full_subset(int n) { return n == 0 ? subset{0} : (subset{1} << n) - 1; }

constexpr int cardinality(subset s) { return std::popcount(s); }

constexpr bool contains(subset s, int i) { return (s >> (i - 1)) & 1u; }

constexpr bool is_superset(subset big, subset small) { return (big & small) == small; }

inline subset make_subset(std::initializer_list<int> indices) {
    subset s = 0;
    for (int i : indices) s |= singleton(i);
    return s;
}

inline std::vector<int> members(subset s) {
    std::vector<int> out;
    for (int i = 1; s; ++i, s >>= 1) {
        if (s & 1u) out.push_back(i);
    }
    return out;
}

// "1,2,4"
inline std::string subset_key(subset s) {
    std::string out;
    for (int i : members(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

inline void require_index_count(int n) {
    if (n < 0 || n > max_indices) {
        throw error(error_code::index_out_of_range,
                    "index count " + std::to_string(n) + " outside 0.." + std::to_string(max_indices));
    }
}

}  // namespace majority
