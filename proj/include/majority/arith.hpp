#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace majority {

using big_int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline rational make_rational(long long num, long long den) {
    return rational(big_int(num), big_int(den));
}

inline big_int numerator_of(const rational& r) { return boost::multiprecision::numerator(r); }
inline big_int denominator_of(const rational& r) { return boost::multiprecision::denominator(r); }

inline big_int floor_of(const rational& r) {
    big_int num = numerator_of(r), den = denominator_of(r);
    big_int q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

inline big_int ceil_of(const rational& r) {
    big_int num = numerator_of(r), den = denominator_of(r);
    big_int q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

inline big_int pow_of(const big_int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline rational pow_of(const rational& base, unsigned exp) {
    rational r = 1;
    for (unsigned k = 0; k < exp; ++k) r *= base;
    return r;
}

// "p/q" or a bare integer; decimals are rejected so comparisons stay exact.
inline rational parse_fraction(std::string_view text) {
    auto digits = [&](std::string_view s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') return false;
        }
        return true;
    };
    auto bad = [&] {
        return error(error_code::parse_error, "not a fraction: '" + std::string(text) + "'");
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw bad();
    big_int n(std::string(num[0] == '+' ? num.substr(1) : num));
    big_int d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0) throw bad();
    return rational(n, d);
}

inline std::string to_fraction_string(const rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Strict a > alpha * b, cross-multiplied.
inline bool exceeds_fraction(const big_int& a, const rational& alpha, const big_int& b) {
    return denominator_of(alpha) * a > numerator_of(alpha) * b;
}

inline bool below_fraction(const big_int& a, const rational& alpha, const big_int& b) {
    return denominator_of(alpha) * a < numerator_of(alpha) * b;
}

inline void require_unit_interval(const rational& alpha) {
    if (alpha <= 0 || alpha >= 1) {
        throw error(error_code::invalid_alpha, "alpha must lie strictly between 0 and 1, got " +
                                                   to_fraction_string(alpha));
    }
}

}  // namespace majority
