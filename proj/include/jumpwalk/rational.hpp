#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "jumpwalk/error.hpp"

namespace jumpwalk {

/// Exact rational with arbitrary-precision integer parts (GMP-backed).
using Rational = mpq_class;

/// mpq_class(num, den) does not reduce; GMP arithmetic requires canonical
/// operands, so any ratio built from parts must pass through here.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a/b", an integer, or a plain decimal ("0.125") into an exact
/// rational. Decimal input is converted exactly, never through binary64.
inline Rational rational_from_string(std::string_view text) {
    auto fail = [&] {
        throw Error(ErrorCode::CONFIG_INVALID,
                    "cannot parse rational from \"" + std::string(text) + "\"");
    };

    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) fail();
    std::string s(text.substr(begin, end - begin + 1));

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
        if (s.empty()) fail();
    }

    auto digits_only = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };

    Rational value;
    if (size_t slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) fail();
        mpz_class d(den);
        if (d == 0) fail();
        value = Rational(mpz_class(num), d);
    } else if (size_t dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!digits_only(whole) || !digits_only(frac)) fail();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(whole) * scale + mpz_class(frac), scale);
    } else {
        if (!digits_only(s)) fail();
        value = Rational(mpz_class(s));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace jumpwalk
