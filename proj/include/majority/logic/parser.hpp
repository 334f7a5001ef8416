#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "sentence.hpp"

namespace majority::logic {

namespace detail {

enum class token_kind { identifier, lparen, rparen, comma, tilde, amp, bar, arrow, iff, end };

struct token {
    token_kind kind;
    std::string text;
    std::size_t column;  // 1-based
};

inline std::string describe(const token& t) {
    return t.kind == token_kind::end ? std::string("end of input") : "'" + t.text + "'";
}

inline std::vector<token> tokenize(std::string_view text) {
    std::vector<token> out;
    std::size_t k = 0;
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (k < text.size()) {
        char c = text[k];
        std::size_t col = k + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
        } else if (is_ident_start(c)) {
            std::size_t start = k;
            while (k < text.size() && is_ident(text[k])) ++k;
            out.push_back({token_kind::identifier, std::string(text.substr(start, k - start)), col});
        } else if (text.substr(k, 3) == "<->") {
            out.push_back({token_kind::iff, "<->", col});
            k += 3;
        } else if (text.substr(k, 2) == "->") {
            out.push_back({token_kind::arrow, "->", col});
            k += 2;
        } else {
            token_kind kind;
            switch (c) {
                case '(': kind = token_kind::lparen; break;
                case ')': kind = token_kind::rparen; break;
                case ',': kind = token_kind::comma; break;
                case '~': kind = token_kind::tilde; break;
                case '&': kind = token_kind::amp; break;
                case '|': kind = token_kind::bar; break;
                default:
                    throw syntax_error(col, {"a sentence token"}, "'" + std::string(1, c) + "'");
            }
            out.push_back({kind, std::string(1, c), col});
            ++k;
        }
    }
    out.push_back({token_kind::end, "", text.size() + 1});
    return out;
}

// Precedence, tightest first: ~  &  |  ->  <->.  -> groups to the right.
class parser {
public:
    explicit parser(std::string_view text) : tokens_(tokenize(text)) {}

    sentence parse() {
        sentence s = equivalence_level();
        if (peek().kind != token_kind::end) fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
        return s;
    }

private:
    const token& peek() const { return tokens_[pos_]; }

    const token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw syntax_error(peek().column, std::move(expected), describe(peek()));
    }

    void expect(token_kind kind, const char* shown) {
        if (peek().kind != kind) fail({shown});
        ++pos_;
    }

    sentence equivalence_level() {
        sentence s = implication_level();
        while (peek().kind == token_kind::iff) {
            take();
            s = equivalence(std::move(s), implication_level());
        }
        return s;
    }

    sentence implication_level() {
        sentence s = disjunction_level();
        if (peek().kind == token_kind::arrow) {
            take();
            return implication(std::move(s), implication_level());
        }
        return s;
    }

    sentence disjunction_level() {
        sentence s = conjunction_level();
        while (peek().kind == token_kind::bar) {
            take();
            s = disjunction(std::move(s), conjunction_level());
        }
        return s;
    }

    sentence conjunction_level() {
        sentence s = unary();
        while (peek().kind == token_kind::amp) {
            take();
            s = conjunction(std::move(s), unary());
        }
        return s;
    }

    sentence unary() {
        if (peek().kind == token_kind::tilde) {
            take();
            return negation(unary());
        }
        return primary();
    }

    sentence primary() {
        const token& t = peek();
        if (t.kind == token_kind::lparen) {
            take();
            sentence s = equivalence_level();
            expect(token_kind::rparen, "')'");
            return s;
        }
        if (t.kind == token_kind::identifier) {
            if (t.text == "true" || t.text == "false") {
                take();
                return truth(t.text == "true");
            }
            if (t.text == "M") {
                take();
                expect(token_kind::lparen, "'('");
                std::string x = symbol();
                expect(token_kind::comma, "','");
                std::string y = symbol();
                expect(token_kind::rparen, "')'");
                return most(std::move(x), std::move(y));
            }
        }
        fail({"'M('", "'~'", "'('", "'true'", "'false'"});
    }

    std::string symbol() {
        if (peek().kind != token_kind::identifier) fail({"relation symbol"});
        return take().text;
    }

    std::vector<token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: atoms M(X,Y), constants true/false, prefix ~, infix & | -> <->,
/// parentheses. Throws syntax_error with a 1-based column.
inline sentence parse_sentence(std::string_view text) { return detail::parser(text).parse(); }

}  // namespace majority::logic
