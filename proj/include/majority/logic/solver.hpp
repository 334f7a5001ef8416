#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../digraph.hpp"
#include "../errors.hpp"
#include "../rational_construct.hpp"
#include "../zonemap.hpp"
#include "model.hpp"
#include "sentence.hpp"

namespace majority::logic {

/// Truth values for atoms M(X, Y).
using atom_assignment = std::map<atom_key, bool>;

/// Atoms of s, plus M(X,X) for every mentioned symbol and the reverse M(Y,X)
/// of every atom M(X,Y) with X != Y.
inline std::set<atom_key> closed_atom_domain(const sentence& s) {
    std::set<atom_key> out = atoms_of(s);
    for (const auto& sym : symbols_of(s)) out.insert({sym, sym});
    for (const auto& [x, y] : atoms_of(s)) {
        if (x != y) out.insert({y, x});
    }
    return out;
}

enum class violation { none, axiom_two, one_way_cycle };

struct atom_graph {
    bool valid = true;
    violation kind = violation::none;
    std::vector<std::string> vertices;  // vertex i is vertices[i-1]
    digraph graph;
    std::vector<std::string> cycle;  // closed: first symbol repeated last
    std::string reason;
};

/// Vertices are the symbols X with M(X,X) true; X -> Y iff M(X,Y) true, X != Y.
inline atom_graph atom_digraph(const atom_assignment& a) {
    atom_graph out;
    auto truth_of = [&](const std::string& x, const std::string& y) {
        auto it = a.find({x, y});
        return it != a.end() && it->second;
    };
    for (const auto& [key, value] : a) {
        if (key.x == key.y && value) out.vertices.push_back(key.x);
    }
    for (const auto& [key, value] : a) {
        if (value && key.x != key.y && (!truth_of(key.x, key.x) || !truth_of(key.y, key.y))) {
            out.valid = false;
            out.kind = violation::axiom_two;
            out.reason = "M(" + key.x + "," + key.y + ") holds but M(" +
                         (truth_of(key.x, key.x) ? key.y + "," + key.y : key.x + "," + key.x) + ") does not";
            return out;
        }
    }
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < out.vertices.size(); ++k) index[out.vertices[k]] = static_cast<int>(k) + 1;
    out.graph = digraph(static_cast<int>(out.vertices.size()));
    for (const auto& [key, value] : a) {
        if (value && key.x != key.y) out.graph.add_edge(index[key.x], index[key.y]);
    }
    if (auto cycle = find_one_way_cycle(out.graph)) {
        out.valid = false;
        out.kind = violation::one_way_cycle;
        for (int v : *cycle) out.cycle.push_back(out.vertices[v - 1]);
        out.reason = "one-way cycle";
        for (std::size_t k = 0; k < out.cycle.size(); ++k) out.reason += (k ? " -> " : ": ") + out.cycle[k];
    }
    return out;
}

/// Largest connected component build_model will construct; the construction
/// enumerates every zone of the component, so it is exponential in this.
inline constexpr int max_component_size = 16;

/// A finite model whose atom truths agree with a. Each connected component of
/// the assignment's digraph gets its own p/q = 1/2 construction on fresh
/// points, so atoms across components are false as required.
inline logic_model build_model(const atom_assignment& a) {
    auto g = atom_digraph(a);
    if (!g.valid) throw error(error_code::invalid_assignment, "assignment has no model: " + g.reason);
    logic_model m;
    for (const auto& [key, value] : a) {
        m.interp[key.x];
        m.interp[key.y];
    }
    const int n = g.graph.n();
    std::vector<int> component(n + 1, 0);
    int count = 0;
    for (int root = 1; root <= n; ++root) {
        if (component[root]) continue;
        component[root] = ++count;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 1; v <= n; ++v) {
                if (!component[v] && (g.graph.has_edge(u, v) || g.graph.has_edge(v, u))) {
                    component[v] = count;
                    stack.push_back(v);
                }
            }
        }
    }
    m.universe_size = 0;
    for (int c = 1; c <= count; ++c) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v) {
            if (component[v] == c) verts.push_back(v);
        }
        if (static_cast<int>(verts.size()) > max_component_size) {
            throw error(error_code::resource_limit, "model component has " + std::to_string(verts.size()) +
                                                        " symbols, limit is " + std::to_string(max_component_size));
        }
        digraph part(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (i != j && g.graph.has_edge(verts[i], verts[j])) {
                    part.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
                }
            }
        }
        auto family = materialize(realize_rational(part, 1, 2));
        for (std::size_t k = 0; k < verts.size(); ++k) {
            auto& ext = m.interp[g.vertices[verts[k] - 1]];
            for (auto point : family.members[k]) ext.push_back(point + m.universe_size);
        }
        m.universe_size += family.universe_size;
    }
    return m;
}

struct solver_options {
    std::size_t max_atoms = 24;  // distinct atoms of the input sentence
};

struct sat_result {
    bool satisfiable = false;
    atom_assignment assignment;  // over closed_atom_domain
    std::optional<logic_model> model;
    std::size_t learned_axioms = 0;
};

namespace detail {

struct cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;

    int fresh() { return ++vars; }
};

// Tseitin encoding; returns the literal equivalent to s.
inline int encode(const sentence& s, cnf& f, const std::map<atom_key, int>& atom_var, int true_var) {
    auto gate = [&](int a, int b, bool conj) {
        int v = f.fresh();
        if (conj) {
            f.clauses.push_back({-v, a});
            f.clauses.push_back({-v, b});
            f.clauses.push_back({v, -a, -b});
        } else {
            f.clauses.push_back({-v, a, b});
            f.clauses.push_back({v, -a});
            f.clauses.push_back({v, -b});
        }
        return v;
    };
    switch (s.kind()) {
        case connective::atom: return atom_var.at({s.first(), s.second()});
        case connective::constant: return s.value() ? true_var : -true_var;
        case connective::negation: return -encode(s.lhs(), f, atom_var, true_var);
        case connective::conjunction:
            return gate(encode(s.lhs(), f, atom_var, true_var), encode(s.rhs(), f, atom_var, true_var), true);
        case connective::disjunction:
            return gate(encode(s.lhs(), f, atom_var, true_var), encode(s.rhs(), f, atom_var, true_var), false);
        case connective::implication:
            return gate(-encode(s.lhs(), f, atom_var, true_var), encode(s.rhs(), f, atom_var, true_var), false);
        case connective::equivalence: {
            int a = encode(s.lhs(), f, atom_var, true_var);
            int b = encode(s.rhs(), f, atom_var, true_var);
            int v = f.fresh();
            f.clauses.push_back({-v, -a, b});
            f.clauses.push_back({-v, a, -b});
            f.clauses.push_back({v, a, b});
            f.clauses.push_back({v, -a, -b});
            return v;
        }
    }
    throw std::logic_error("unknown connective");
}

using values = std::vector<std::int8_t>;  // index by var; 0 unassigned, +1 true, -1 false

inline std::int8_t literal_value(const values& val, int lit) {
    std::int8_t v = val[lit > 0 ? lit : -lit];
    return lit > 0 ? v : static_cast<std::int8_t>(-v);
}

inline bool propagate(const cnf& f, values& val) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : f.clauses) {
            int open = 0, last = 0;
            bool satisfied = false;
            for (int lit : clause) {
                auto v = literal_value(val, lit);
                if (v > 0) {
                    satisfied = true;
                    break;
                }
                if (v == 0) {
                    ++open;
                    last = lit;
                }
            }
            if (satisfied) continue;
            if (open == 0) return false;
            if (open == 1) {
                val[last > 0 ? last : -last] = last > 0 ? 1 : -1;
                changed = true;
            }
        }
    }
    return true;
}

// Decides atoms (vars 1..atom_count) before auxiliaries, false first.
inline bool search(const cnf& f, values val, values& out) {
    if (!propagate(f, val)) return false;
    int pick = 0;
    for (int v = 1; v <= f.vars; ++v) {
        if (val[v] == 0) {
            pick = v;
            break;
        }
    }
    if (pick == 0) {
        out = std::move(val);
        return true;
    }
    for (std::int8_t choice : {std::int8_t{-1}, std::int8_t{1}}) {
        values next = val;
        next[pick] = choice;
        if (search(f, std::move(next), out)) return true;
    }
    return false;
}

}  // namespace detail

/// Satisfiability with model construction. Propositional search over the closed
/// atom domain; assignments whose digraph has a one-way cycle are blocked by the
/// matching instance of the cycle axiom and the search resumes.
inline sat_result decide_sat(const sentence& s, const solver_options& options = {}) {
    const auto own_atoms = atoms_of(s);
    if (own_atoms.size() > options.max_atoms) {
        throw error(error_code::resource_limit, "sentence has " + std::to_string(own_atoms.size()) +
                                                    " atoms, limit is " + std::to_string(options.max_atoms));
    }
    const auto domain = closed_atom_domain(s);

    detail::cnf f;
    std::map<atom_key, int> atom_var;
    std::vector<atom_key> var_atom(1);
    for (const auto& key : domain) {
        atom_var[key] = f.fresh();
        var_atom.push_back(key);
    }
    const int atom_count = f.vars;
    for (const auto& [x, y] : domain) {
        if (x == y) continue;
        f.clauses.push_back({-atom_var[{x, y}], atom_var[{x, x}]});
        f.clauses.push_back({-atom_var[{x, y}], atom_var[{y, y}]});
    }
    const int true_var = f.fresh();
    f.clauses.push_back({true_var});
    f.clauses.push_back({detail::encode(s, f, atom_var, true_var)});

    sat_result result;
    for (;;) {
        detail::values found;
        if (!detail::search(f, detail::values(f.vars + 1, 0), found)) return result;

        atom_assignment a;
        for (int v = 1; v <= atom_count; ++v) a[var_atom[v]] = found[v] > 0;
        auto g = atom_digraph(a);
        if (g.valid) {
            result.satisfiable = true;
            result.assignment = a;
            result.model = build_model(a);
            if (!evaluate(*result.model, s)) throw std::logic_error("constructed model does not satisfy the sentence");
            return result;
        }
        if (g.kind != violation::one_way_cycle) throw std::logic_error("assignment escaped the axiom clauses");

        // (M(Z1,Z2) & ... & M(Zk,Z1)) -> (M(Z2,Z1) | ... | M(Z1,Zk))
        std::vector<int> clause;
        for (std::size_t k = 0; k + 1 < g.cycle.size(); ++k) {
            clause.push_back(-atom_var.at({g.cycle[k], g.cycle[k + 1]}));
            clause.push_back(atom_var.at({g.cycle[k + 1], g.cycle[k]}));
        }
        f.clauses.push_back(std::move(clause));
        ++result.learned_axioms;
    }
}

inline sentence conjoin(const std::vector<sentence>& parts) {
    if (parts.empty()) return truth(true);
    sentence s = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) s = conjunction(s, parts[k]);
    return s;
}

/// premises |= phi over finite models.
inline bool entails(const std::vector<sentence>& premises, const sentence& phi, const solver_options& options = {}) {
    auto query = premises.empty() ? negation(phi) : conjunction(conjoin(premises), negation(phi));
    return !decide_sat(query, options).satisfiable;
}

}  // namespace majority::logic
