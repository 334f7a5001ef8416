#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "sentence.hpp"

namespace majority::logic {

/// Finite universe {0..universe_size-1} with an extension per relation symbol.
/// Symbols without an entry denote the empty set.
struct logic_model {
    std::uint64_t universe_size = 0;
    std::map<std::string, std::vector<std::uint64_t>> interp;  // sorted, duplicate-free

    const std::vector<std::uint64_t>& extension(const std::string& symbol) const {
        static const std::vector<std::uint64_t> none;
        auto it = interp.find(symbol);
        return it == interp.end() ? none : it->second;
    }

    void validate() const {
        for (const auto& [name, points] : interp) {
            if (!std::is_sorted(points.begin(), points.end()) ||
                std::adjacent_find(points.begin(), points.end()) != points.end() ||
                (!points.empty() && points.back() >= universe_size)) {
                throw error(error_code::precondition_violated,
                            "extension of " + name + " is not a subset of the universe");
            }
        }
    }
};

/// M(X,Y) holds iff |[X] ∩ [Y]| > |[X]| / 2; so it fails whenever [X] or [Y] is empty.
inline bool holds_most(const logic_model& m, const std::string& x, const std::string& y) {
    const auto& a = m.extension(x);
    const auto& b = m.extension(y);
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return 2 * common > a.size();
}

inline bool evaluate(const logic_model& m, const sentence& s) {
    switch (s.kind()) {
        case connective::atom: return holds_most(m, s.first(), s.second());
        case connective::constant: return s.value();
        case connective::negation: return !evaluate(m, s.lhs());
        case connective::conjunction: return evaluate(m, s.lhs()) && evaluate(m, s.rhs());
        case connective::disjunction: return evaluate(m, s.lhs()) || evaluate(m, s.rhs());
        case connective::implication: return !evaluate(m, s.lhs()) || evaluate(m, s.rhs());
        case connective::equivalence: return evaluate(m, s.lhs()) == evaluate(m, s.rhs());
    }
    return false;
}

}  // namespace majority::logic
