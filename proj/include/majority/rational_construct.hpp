#pragma once

#include <vector>

#include "arith.hpp"
#include "digraph.hpp"
#include "zonemap.hpp"

namespace majority {

struct rational_params {
    big_int p, q;
    int n = 0;
    big_int a, m;
};

inline void require_pq(const big_int& p, const big_int& q, bool allow_equal) {
    if (p < 1 || p > q || (!allow_equal && p == q)) {
        throw error(error_code::invalid_pq,
                    "need 0 < p " + std::string(allow_equal ? "<=" : "<") + " q, got p=" + p.str() +
                        " q=" + q.str());
    }
}

/// Zone profile of B_i = { s in {1..q}^n : s_i <= p }: zone(I) = p^|I| (q-p)^(n-|I|).
inline zone_map base_zones(int n, const big_int& p, const big_int& q) {
    if (n < 1) throw error(error_code::index_out_of_range, "base_zones needs n >= 1");
    require_pq(p, q, true);
    zone_map z(n);
    for (subset s = 1; s <= full_subset(n); ++s) {
        unsigned k = static_cast<unsigned>(cardinality(s));
        z.set(s, pow_of(p, k) * pow_of(q - p, static_cast<unsigned>(n) - k));
    }
    return z;
}

/// (p + a r) / (q + a r + s) > p / q, evaluated both directly and via
/// a > p s / (r (q - p)); the two must agree.
inline bool check_elementary(const big_int& p, const big_int& q, const big_int& a, const big_int& r,
                             const big_int& s) {
    rational lhs(p + a * r, q + a * r + s);
    bool direct = lhs > rational(p, q);
    bool algebraic = a * r * (q - p) > p * s;
    if (direct != algebraic) {
        throw error(error_code::precondition_violated, "elementary inequality forms disagree");
    }
    return direct;
}

/// Smallest a with (q-p) a > q, then smallest m with m p^2 (q-p)^(n-2) > a p n.
inline rational_params choose_parameters(int n, const big_int& p, const big_int& q) {
    require_pq(p, q, false);
    if (n < 2) throw error(error_code::index_out_of_range, "choose_parameters needs n >= 2");
    rational_params out{p, q, n, {}, {}};
    out.a = q / (q - p) + 1;
    big_int zone = p * p * pow_of(q - p, static_cast<unsigned>(n - 2));
    out.m = (out.a * p * n) / zone + 1;
    return out;
}

/// Every intermediate stage of the p/q construction, in appropriate-pair labels.
struct rational_trace {
    rational_params params;
    appropriate_pair pair;
    zone_map scaled;        // m copies of the base sets
    zone_map common;        // + a p n points shared by all sets
    zone_map padded;        // + q i private points per set
    zone_map separated;     // non-adjacent private intersections emptied
    zone_map final_zones;   // one-way pairs adjusted
    struct adjustment {
        int i, j;
        big_int c;
    };
    std::vector<adjustment> one_way_moves;
};

namespace detail {

inline zone_map degenerate_witness(int n) {
    zone_map z(n);
    if (n == 1) z.set(singleton(1), 1);
    return z;
}

}  // namespace detail

inline rational_trace realize_rational_trace(const digraph& g, const big_int& p, const big_int& q) {
    require_pq(p, q, false);
    rational_trace t;
    t.pair = to_appropriate_pair(g);
    const int n = g.n();
    require_index_count(n);
    if (n < 2) {
        t.final_zones = detail::degenerate_witness(n);
        t.params = {p, q, n, 0, 0};
        return t;
    }
    t.params = choose_parameters(n, p, q);
    const auto& [pp, qq, nn, a, m] = t.params;
    const big_int apn = a * p * n;

    zone_map z = base_zones(n, p, q);
    zone_map scaled(n);
    for (const auto& [s, v] : z.entries()) scaled.set(s, v * m);
    t.scaled = scaled;

    z = scaled;
    z.add(full_subset(n), apn);
    t.common = z;

    for (int i = 1; i <= n; ++i) z.add(singleton(i), q * i);
    t.padded = z;

    // Two-way pairs keep their intersection; the elementary inequality with
    // r = p n, s = q n is what makes them survive the private padding.
    if (!t.pair.two_way.empty() && !check_elementary(p, q, a, p * n, q * n)) {
        throw error(error_code::precondition_violated, "parameter a too small for two-way pairs");
    }

    // Only the m scaled copies leave; at n = 2 the pair zone also holds the
    // common points, which stay shared.
    const big_int private_part = m * p * p * pow_of(q - p, static_cast<unsigned>(n - 2));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (t.pair.two_way.count({i, j}) || t.pair.one_way.count({i, j})) continue;
            z = transfer_private(std::move(z), i, j, private_part);
        }
    }
    t.separated = z;

    const big_int ceiling = ceil_of(rational(big_int(q - p) * apn, q));
    for (auto [i, j] : t.pair.one_way) {
        big_int c = ceiling - p * i - 1;
        z = transfer_private(std::move(z), i, j, c);
        t.one_way_moves.push_back({i, j, c});
    }
    t.final_zones = std::move(z);
    return t;
}

/// Witness for g as a proportionality p/q-digraph, indexed by g's own vertices.
inline zone_map realize_rational(const digraph& g, const big_int& p, const big_int& q) {
    auto t = realize_rational_trace(g, p, q);
    return relabel_indices(t.final_zones, t.pair.vertex);
}

/// 3n(1 + 2^n) + n(n+1) + 3ne, the universe size quoted for p/q = 1/2.
inline big_int size_bound_rational(int n, const big_int& e) {
    big_int nn = n;
    return 3 * nn * (1 + pow_of(big_int(2), static_cast<unsigned>(n))) + nn * (nn + 1) + 3 * nn * e;
}

}  // namespace majority
