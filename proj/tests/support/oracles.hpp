#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <majority/digraph.hpp>
#include <majority/logic/sentence.hpp>
#include <majority/zonemap.hpp>

namespace oracle {

using majority::digraph;

/// All 2^(n(n-1)) labeled digraphs on 1..n, ordered by their edge bitcode.
inline std::vector<digraph> all_digraphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u != v) slots.emplace_back(u, v);
        }
    }
    std::vector<digraph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
        digraph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if ((code >> k) & 1u) g.add_edge(slots[k].first, slots[k].second);
        }
        out.push_back(std::move(g));
    }
    return out;
}

/// Enumerates every simple directed cycle (rooted at its smallest vertex) and
/// reports whether one of them uses only one-way edges.
inline bool has_one_way_cycle(const digraph& g) {
    const int n = g.n();
    auto one_way = [&](int u, int v) { return g.has_edge(u, v) && !g.has_edge(v, u); };
    std::vector<bool> used(n + 1, false);
    std::function<bool(int, int)> extend = [&](int root, int at) {
        for (int next = root; next <= n; ++next) {
            if (next == at || !one_way(at, next)) continue;
            if (next == root) return true;
            if (used[next]) continue;
            used[next] = true;
            bool hit = extend(root, next);
            used[next] = false;
            if (hit) return true;
        }
        return false;
    };
    for (int root = 1; root <= n; ++root) {
        used[root] = true;
        if (extend(root, root)) return true;
        used[root] = false;
    }
    return false;
}

inline std::size_t common_points(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.size();
}

/// Counts raw point memberships of an explicit family; threshold num/den.
inline digraph count_induced(const majority::set_family& f, std::int64_t num, std::int64_t den) {
    digraph g(f.n);
    for (int i = 1; i <= f.n; ++i) {
        for (int j = 1; j <= f.n; ++j) {
            if (i == j) continue;
            auto both = static_cast<std::int64_t>(common_points(f.members[i - 1], f.members[j - 1]));
            auto size = static_cast<std::int64_t>(f.members[i - 1].size());
            if (den * both > num * size) g.add_edge(i, j);
        }
    }
    return g;
}

/// Evaluates a sentence under a plain truth table for atoms.
inline bool eval_atoms(const majority::logic::sentence& s,
                       const std::map<majority::logic::atom_key, bool>& a) {
    using majority::logic::connective;
    switch (s.kind()) {
        case connective::atom: {
            auto it = a.find({s.first(), s.second()});
            return it != a.end() && it->second;
        }
        case connective::constant: return s.value();
        case connective::negation: return !eval_atoms(s.lhs(), a);
        case connective::conjunction: return eval_atoms(s.lhs(), a) && eval_atoms(s.rhs(), a);
        case connective::disjunction: return eval_atoms(s.lhs(), a) || eval_atoms(s.rhs(), a);
        case connective::implication: return !eval_atoms(s.lhs(), a) || eval_atoms(s.rhs(), a);
        case connective::equivalence: return eval_atoms(s.lhs(), a) == eval_atoms(s.rhs(), a);
    }
    return false;
}

/// Realizability of a full atom assignment, checked from scratch: every true
/// M(X,Y) needs M(X,X) and M(Y,Y), and the digraph on the diagonal-true symbols
/// must have no cycle made only of one-way edges.
inline bool assignment_realizable(const std::map<majority::logic::atom_key, bool>& a) {
    auto val = [&](const std::string& x, const std::string& y) {
        auto it = a.find({x, y});
        return it != a.end() && it->second;
    };
    std::vector<std::string> verts;
    for (const auto& [k, v] : a) {
        if (v && k.x != k.y && (!val(k.x, k.x) || !val(k.y, k.y))) return false;
        if (v && k.x == k.y) verts.push_back(k.x);
    }
    digraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i != j && val(verts[i], verts[j])) g.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return !has_one_way_cycle(g);
}

/// Exhaustive search over all 2^k assignments of the given atom domain.
inline bool brute_force_sat(const majority::logic::sentence& s,
                            const std::vector<majority::logic::atom_key>& domain) {
    const std::size_t k = domain.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        std::map<majority::logic::atom_key, bool> a;
        for (std::size_t b = 0; b < k; ++b) a[domain[b]] = (code >> b) & 1u;
        if (eval_atoms(s, a) && assignment_realizable(a)) return true;
    }
    return false;
}

inline bool brute_force_3sat(const std::vector<std::vector<int>>& clauses, int vars) {
    for (std::uint32_t code = 0; code < (1u << vars); ++code) {
        bool all = true;
        for (const auto& c : clauses) {
            bool any = false;
            for (int lit : c) {
                int v = lit > 0 ? lit : -lit;
                bool x = (code >> (v - 1)) & 1u;
                if (lit > 0 ? x : !x) any = true;
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

/// Random sentence over the given atoms, at most `depth` connectives deep.
inline majority::logic::sentence random_sentence(std::mt19937& rng,
                                                 const std::vector<majority::logic::atom_key>& atoms, int depth) {
    using namespace majority::logic;
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 6);
    int kind = pick(rng);
    if (kind <= 1) {
        const auto& a = atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
        return most(a.x, a.y);
    }
    if (kind == 2) return negation(random_sentence(rng, atoms, depth - 1));
    auto l = random_sentence(rng, atoms, depth - 1);
    auto r = random_sentence(rng, atoms, depth - 1);
    switch (kind) {
        case 3: return conjunction(l, r);
        case 4: return disjunction(l, r);
        case 5: return implication(l, r);
        default: return equivalence(l, r);
    }
}

/// Up to `max_atoms` distinct atoms over the first `symbols` of A, B, C, D.
inline std::vector<majority::logic::atom_key> random_atom_pool(std::mt19937& rng, int symbols, int max_atoms) {
    static const char* names[] = {"A", "B", "C", "D"};
    std::vector<majority::logic::atom_key> all;
    for (int i = 0; i < symbols; ++i) {
        for (int j = 0; j < symbols; ++j) all.push_back({names[i], names[j]});
    }
    std::shuffle(all.begin(), all.end(), rng);
    int k = std::uniform_int_distribution<int>(1, std::min<int>(max_atoms, static_cast<int>(all.size())))(rng);
    all.resize(k);
    return all;
}

inline majority::zone_map random_zone_map(std::mt19937& rng, int n, int max_zone) {
    majority::zone_map z(n);
    std::uniform_int_distribution<int> value(0, max_zone);
    std::bernoulli_distribution present(0.6);
    for (majority::subset s = 1; s <= majority::full_subset(n); ++s) {
        if (present(rng)) z.set(s, value(rng));
    }
    return z;
}

}  // namespace oracle
