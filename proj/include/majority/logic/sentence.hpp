#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>

namespace majority::logic {

enum class connective { atom, constant, negation, conjunction, disjunction, implication, equivalence };

/// Immutable sentence of the boolean language over atoms M(X, Y) ("most X are Y").
/// Copies share structure.
class sentence {
public:
    connective kind() const { return node_->kind; }

    // Atom symbols.
    const std::string& first() const { return node_->x; }
    const std::string& second() const { return node_->y; }

    bool value() const { return node_->value; }

    // Operand of a negation, or the left operand of a binary connective.
    const sentence& lhs() const { return *node_->lhs; }
    const sentence& rhs() const { return *node_->rhs; }

    friend bool operator==(const sentence& a, const sentence& b) {
        if (a.node_ == b.node_) return true;
        const node& l = *a.node_;
        const node& r = *b.node_;
        if (l.kind != r.kind) return false;
        switch (l.kind) {
            case connective::atom: return l.x == r.x && l.y == r.y;
            case connective::constant: return l.value == r.value;
            case connective::negation: return *l.lhs == *r.lhs;
            default: return *l.lhs == *r.lhs && *l.rhs == *r.rhs;
        }
    }

    friend sentence most(std::string x, std::string y);
    friend sentence truth(bool value);
    friend sentence negation(sentence s);
    friend sentence binary(connective kind, sentence a, sentence b);

private:
    struct node {
        connective kind = connective::constant;
        std::string x, y;
        bool value = true;
        std::shared_ptr<const sentence> lhs, rhs;
    };

    explicit sentence(std::shared_ptr<const node> n) : node_(std::move(n)) {}

    std::shared_ptr<const node> node_;
};

inline sentence most(std::string x, std::string y) {
    auto n = std::make_shared<sentence::node>();
    n->kind = connective::atom;
    n->x = std::move(x);
    n->y = std::move(y);
    return sentence(std::move(n));
}

inline sentence truth(bool value) {
    auto n = std::make_shared<sentence::node>();
    n->kind = connective::constant;
    n->value = value;
    return sentence(std::move(n));
}

inline sentence negation(sentence s) {
    auto n = std::make_shared<sentence::node>();
    n->kind = connective::negation;
    n->lhs = std::make_shared<const sentence>(std::move(s));
    return sentence(std::move(n));
}

inline sentence binary(connective kind, sentence a, sentence b) {
    auto n = std::make_shared<sentence::node>();
    n->kind = kind;
    n->lhs = std::make_shared<const sentence>(std::move(a));
    n->rhs = std::make_shared<const sentence>(std::move(b));
    return sentence(std::move(n));
}

inline sentence conjunction(sentence a, sentence b) { return binary(connective::conjunction, std::move(a), std::move(b)); }
inline sentence disjunction(sentence a, sentence b) { return binary(connective::disjunction, std::move(a), std::move(b)); }
inline sentence implication(sentence a, sentence b) { return binary(connective::implication, std::move(a), std::move(b)); }
inline sentence equivalence(sentence a, sentence b) { return binary(connective::equivalence, std::move(a), std::move(b)); }

struct atom_key {
    std::string x, y;

    friend auto operator<=>(const atom_key&, const atom_key&) = default;
    friend bool operator==(const atom_key&, const atom_key&) = default;
};

namespace detail {

template <class Visit>
void for_each_atom(const sentence& s, Visit&& visit) {
    switch (s.kind()) {
        case connective::atom: visit(s.first(), s.second()); break;
        case connective::constant: break;
        case connective::negation: for_each_atom(s.lhs(), visit); break;
        default:
            for_each_atom(s.lhs(), visit);
            for_each_atom(s.rhs(), visit);
    }
}

inline int precedence(connective c) {
    switch (c) {
        case connective::equivalence: return 1;
        case connective::implication: return 2;
        case connective::disjunction: return 3;
        case connective::conjunction: return 4;
        case connective::negation: return 5;
        default: return 6;
    }
}

inline const char* token_of(connective c) {
    switch (c) {
        case connective::equivalence: return " <-> ";
        case connective::implication: return " -> ";
        case connective::disjunction: return " | ";
        case connective::conjunction: return " & ";
        default: return "";
    }
}

inline void print(const sentence& s, int required, std::string& out) {
    const int own = precedence(s.kind());
    const bool wrap = own < required;
    if (wrap) out += '(';
    switch (s.kind()) {
        case connective::atom: out += "M(" + s.first() + "," + s.second() + ")"; break;
        case connective::constant: out += s.value() ? "true" : "false"; break;
        case connective::negation:
            out += '~';
            print(s.lhs(), own, out);
            break;
        default: {
            // -> groups to the right, the others to the left
            const bool right_assoc = s.kind() == connective::implication;
            print(s.lhs(), right_assoc ? own + 1 : own, out);
            out += token_of(s.kind());
            print(s.rhs(), right_assoc ? own : own + 1, out);
        }
    }
    if (wrap) out += ')';
}

}  // namespace detail

inline std::set<atom_key> atoms_of(const sentence& s) {
    std::set<atom_key> out;
    detail::for_each_atom(s, [&](const std::string& x, const std::string& y) { out.insert({x, y}); });
    return out;
}

inline std::set<std::string> symbols_of(const sentence& s) {
    std::set<std::string> out;
    detail::for_each_atom(s, [&](const std::string& x, const std::string& y) {
        out.insert(x);
        out.insert(y);
    });
    return out;
}

/// ASCII rendering with minimal parentheses; parse_sentence reads it back unchanged.
inline std::string to_string(const sentence& s) {
    std::string out;
    detail::print(s, 0, out);
    return out;
}

}  // namespace majority::logic
