#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "digraph.hpp"
#include "subset_function.hpp"

namespace majority {

/// Venn-zone cardinalities of a family A_1..A_n: zone(I) points lie in exactly
/// the sets indexed by I.
using zone_map = subset_function<big_int>;

/// Explicit family over points 0..universe_size-1; members[i-1] is A_i, sorted.
struct set_family {
    int n = 0;
    std::uint64_t universe_size = 0;
    std::vector<std::vector<std::uint64_t>> members;
};

namespace detail {

inline void check_index(const zone_map& z, int i) {
    if (i < 1 || i > z.n()) {
        throw error(error_code::index_out_of_range,
                    "index " + std::to_string(i) + " outside 1.." + std::to_string(z.n()));
    }
}

inline void check_pair(const zone_map& z, int i, int j) {
    check_index(z, i);
    check_index(z, j);
    if (i == j) throw error(error_code::equal_indices, "pair indices must differ");
}

}  // namespace detail

inline big_int set_size(const zone_map& z, int i) {
    detail::check_index(z, i);
    return z.star(singleton(i));
}

inline big_int pair_intersection(const zone_map& z, int i, int j) {
    detail::check_pair(z, i, j);
    return z.star(pair_of(i, j));
}

inline big_int total_points(const zone_map& z) { return z.total(); }

/// Moves c points out of the private intersection of A_i and A_j and hands a
/// separate copy of each to A_i and to A_j.
inline zone_map transfer_private(zone_map z, int i, int j, const big_int& c) {
    detail::check_pair(z, i, j);
    if (c < 0 || c > z[pair_of(i, j)]) {
        throw error(error_code::insufficient_zone,
                    "cannot move " + c.str() + " points out of zone {" + subset_key(pair_of(i, j)) +
                        "} holding " + z[pair_of(i, j)].str());
    }
    z.add(pair_of(i, j), -c);
    z.add(singleton(i), c);
    z.add(singleton(j), c);
    return z;
}

namespace detail {

template <class EdgeTest>
digraph induced(const zone_map& z, EdgeTest&& test) {
    const int n = z.n();
    std::vector<big_int> sizes(n + 1);
    for (int i = 1; i <= n; ++i) sizes[i] = set_size(z, i);
    digraph g(n);
    for (int i = 1; i <= n; ++i) {
        if (sizes[i] == 0) continue;
        for (int j = i + 1; j <= n; ++j) {
            big_int both = pair_intersection(z, i, j);
            if (test(both, sizes[i])) g.add_edge(i, j);
            if (sizes[j] != 0 && test(both, sizes[j])) g.add_edge(j, i);
        }
    }
    return g;
}

}  // namespace detail

/// i -> j iff |A_i ∩ A_j| > alpha |A_i|, exact. Empty sets have no edges.
inline digraph induced_digraph(const zone_map& z, const rational& alpha) {
    return detail::induced(z, [&](const big_int& both, const big_int& size) {
        return exceeds_fraction(both, alpha, size);
    });
}

/// i -> j iff alpha |A_i| < |A_i ∩ A_j| < beta |A_i|, exact.
inline digraph induced_interval_digraph(const zone_map& z, const rational& alpha, const rational& beta) {
    if (!(alpha < beta)) {
        throw error(error_code::invalid_interval,
                    "need alpha < beta, got " + to_fraction_string(alpha) + " and " + to_fraction_string(beta));
    }
    return detail::induced(z, [&](const big_int& both, const big_int& size) {
        return exceeds_fraction(both, alpha, size) && below_fraction(both, beta, size);
    });
}

/// Points are numbered consecutively, zone by zone in ascending bitmask order.
inline set_family materialize(const zone_map& z) {
    set_family f;
    f.n = z.n();
    f.members.resize(z.n());
    std::uint64_t next = 0;
    for (const auto& [s, count] : z.entries()) {
        auto k = count.convert_to<std::uint64_t>();
        auto idx = members(s);
        for (std::uint64_t p = 0; p < k; ++p, ++next) {
            for (int i : idx) f.members[i - 1].push_back(next);
        }
    }
    f.universe_size = next;
    return f;
}

inline zone_map from_set_family(const set_family& f) {
    std::map<std::uint64_t, subset> membership;
    for (int i = 1; i <= f.n; ++i) {
        for (auto p : f.members[i - 1]) membership[p] |= singleton(i);
    }
    zone_map z(f.n);
    for (const auto& [point, s] : membership) z.add(s, 1);
    return z;
}

}  // namespace majority
