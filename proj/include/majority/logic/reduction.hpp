#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "sentence.hpp"

namespace majority::logic {

using clause3 = std::vector<int>;  // nonzero DIMACS literals, exactly three

/// x_i becomes M(X{2i-1}, X{2i}); clauses become left-nested disjunctions and the
/// instance their left-nested conjunction (true when there are no clauses).
inline sentence reduce_3sat(const std::vector<clause3>& clauses) {
    auto literal = [](int lit) {
        int v = lit > 0 ? lit : -lit;
        sentence a = most("X" + std::to_string(2 * v - 1), "X" + std::to_string(2 * v));
        return lit > 0 ? a : negation(a);
    };
    std::optional<sentence> out;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto& cl = clauses[c];
        if (cl.size() != 3) {
            throw error(error_code::malformed_clause, "clause " + std::to_string(c + 1) + " has " +
                                                          std::to_string(cl.size()) + " literals, need 3");
        }
        for (int lit : cl) {
            if (lit == 0) throw error(error_code::malformed_clause, "literal 0 in clause " + std::to_string(c + 1));
        }
        sentence d = disjunction(disjunction(literal(cl[0]), literal(cl[1])), literal(cl[2]));
        out = out ? conjunction(*out, d) : d;
    }
    return out ? *out : truth(true);
}

/// DIMACS-style CNF: 'c' comment lines, optional 'p cnf V C' header, clauses as
/// literal lists terminated by 0 (possibly spanning lines).
inline std::vector<clause3> parse_dimacs(const std::string& text) {
    std::vector<clause3> out;
    clause3 current;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
        if (line[first] == 'p') continue;
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(word, &used);
                if (used != word.size()) throw std::invalid_argument(word);
            } catch (const std::exception&) {
                throw error(error_code::parse_error,
                            "line " + std::to_string(line_no) + ": not a literal: '" + word + "'");
            }
            if (lit == 0) {
                out.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

}  // namespace majority::logic
