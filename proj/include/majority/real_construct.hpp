#pragma once

#include <map>
#include <vector>

#include "arith.hpp"
#include "digraph.hpp"
#include "subset_function.hpp"
#include "zonemap.hpp"

namespace majority {

/// Exact nonnegative rational weight per nonempty subset.
using size_function = subset_function<rational>;

struct real_alpha_params {
    rational alpha;
    rational epsilon;
    rational delta;
    std::map<edge, rational> gamma;  // one-way pairs (i, j), i < j
};

inline rational star(const size_function& f, subset s) { return f.star(s); }

/// f(I) = alpha^(|I|-1) (1-alpha)^(n-|I|). Every set then has weight 1 and
/// every pairwise intersection weight alpha.
inline size_function canonical_size_function(int n, const rational& alpha) {
    require_unit_interval(alpha);
    if (n < 2) throw error(error_code::index_out_of_range, "canonical size function needs n >= 2");
    require_index_count(n);
    size_function f(n);
    const rational rest = 1 - alpha;
    for (subset s = 1; s <= full_subset(n); ++s) {
        unsigned k = static_cast<unsigned>(cardinality(s));
        f.set(s, pow_of(alpha, k - 1) * pow_of(rest, static_cast<unsigned>(n) - k));
    }
    return f;
}

inline real_alpha_params make_real_params(int n, const rational& alpha) {
    require_unit_interval(alpha);
    real_alpha_params p;
    p.alpha = alpha;
    p.epsilon = alpha * pow_of(rational(1 - alpha), static_cast<unsigned>(n - 1)) / 2;
    p.delta = p.epsilon * (1 - alpha) / (2 * alpha);
    return p;
}

/// Any gamma strictly inside
///   (eps(1-alpha) - alpha delta j/n,  eps(1-alpha) - alpha delta i/n)
/// keeps (alpha + eps - gamma) above alpha times A_i's weight and below alpha
/// times A_j's. We take the midpoint.
inline rational choose_gamma(int i, int j, const real_alpha_params& params, int n) {
    if (!(i < j)) throw error(error_code::precondition_violated, "choose_gamma needs i < j");
    const rational& a = params.alpha;
    return params.epsilon * (1 - a) - a * params.delta * (i + j) / (2 * n);
}

struct real_construction {
    appropriate_pair pair;
    real_alpha_params params;
    size_function canonical;  // alpha^(|I|-1) (1-alpha)^(n-|I|) per zone
    size_function padded;     // + eps to the full intersection, + i delta / n privately
    size_function adjusted;   // private intersections moved out per pair type
};

namespace detail {

// Strict ratio conditions on the intersection weights for every ordered pair.
inline bool weights_separate(const size_function& h, const digraph& target, const rational& alpha) {
    const int n = h.n();
    for (int i = 1; i <= n; ++i) {
        rational whole = h.star(singleton(i));
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            rational both = h.star(pair_of(i, j));
            if (target.has_edge(i, j) ? !(both > alpha * whole) : !(both < alpha * whole)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Builds the adjusted size function for g, in appropriate-pair labels.
inline real_construction build_h(const digraph& g, const rational& alpha) {
    require_unit_interval(alpha);
    real_construction out;
    out.pair = to_appropriate_pair(g);
    const int n = g.n();
    if (n < 2) throw error(error_code::index_out_of_range, "build_h needs n >= 2");

    out.params = make_real_params(n, alpha);
    out.canonical = canonical_size_function(n, alpha);

    const rational& eps = out.params.epsilon;
    const rational& delta = out.params.delta;
    size_function padded = out.canonical;
    padded.add(full_subset(n), eps);
    for (int i = 1; i <= n; ++i) padded.add(singleton(i), rational(i) * delta / n);
    out.padded = padded;

    size_function h = padded;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            rational moved = 0;
            if (out.pair.two_way.count({i, j})) {
                continue;
            } else if (out.pair.one_way.count({i, j})) {
                moved = choose_gamma(i, j, out.params, n);
                out.params.gamma[{i, j}] = moved;
            } else {
                moved = padded[pair_of(i, j)];
            }
            h.add(pair_of(i, j), -moved);
            h.add(singleton(i), moved);
            h.add(singleton(j), moved);
        }
    }
    out.adjusted = h;

    if (!detail::weights_separate(h, out.pair.relabeled(), alpha)) {
        throw error(error_code::precondition_violated, "adjusted size function does not separate the digraph");
    }
    return out;
}

struct rounded_witness {
    zone_map zones;
    big_int scale;  // N
};

/// zone(J) = floor(h(J) N), starting from N = 2^(2n) and doubling until the
/// rounded family induces exactly `target` at alpha.
inline rounded_witness round_to_zonemap(const size_function& h, const digraph& target, const rational& alpha) {
    const int n = h.n();
    if (target.n() != n) throw error(error_code::precondition_violated, "vertex count mismatch");
    if (!detail::weights_separate(h, target, alpha)) {
        throw error(error_code::precondition_violated, "size function violates the strict ratio conditions");
    }
    big_int scale = pow_of(big_int(2), static_cast<unsigned>(2 * n));
    // Termination is guaranteed once 2^(n-1)/N falls below the smallest
    // ratio margin; the cap only guards against a broken precondition.
    for (int round = 0; round < 256; ++round, scale *= 2) {
        zone_map z(n);
        for (const auto& [s, w] : h.entries()) z.set(s, floor_of(w * scale));
        if (induced_digraph(z, alpha) == target) return {std::move(z), scale};
    }
    throw error(error_code::precondition_violated, "rounding did not converge");
}

struct real_trace {
    real_construction construction;
    rounded_witness rounded;  // appropriate-pair labels
};

inline real_trace realize_real_trace(const digraph& g, const rational& alpha) {
    require_unit_interval(alpha);
    require_index_count(g.n());
    if (g.n() < 2) {
        real_trace t;
        t.construction.pair = to_appropriate_pair(g);
        t.rounded.zones = zone_map(g.n());
        if (g.n() == 1) t.rounded.zones.set(singleton(1), 1);
        t.rounded.scale = 1;
        return t;
    }
    real_trace t;
    t.construction = build_h(g, alpha);
    t.rounded = round_to_zonemap(t.construction.adjusted, t.construction.pair.relabeled(), alpha);
    return t;
}

/// Witness for g as a proportionality alpha-digraph, indexed by g's own vertices.
inline zone_map realize_real(const digraph& g, const rational& alpha) {
    auto t = realize_real_trace(g, alpha);
    return relabel_indices(t.rounded.zones, t.construction.pair.vertex);
}

/// (4n^2 + 5n) 2^(2n), the quoted ceiling for alpha near 1/2.
inline big_int size_bound_real(int n) {
    big_int nn = n;
    return (4 * nn * nn + 5 * nn) * pow_of(big_int(2), static_cast<unsigned>(2 * n));
}

}  // namespace majority
