#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "sdpcert/errors.hpp"

namespace sdpcert {

using Rational = mpq_class;

inline mpz_class pow10_z(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10u, e);
    return p;
}

inline Rational rational_pow10(long e) {
    if (e >= 0) return Rational(pow10_z(static_cast<unsigned long>(e)));
    return Rational(1, pow10_z(static_cast<unsigned long>(-e)));
}

// Exact parse of "p/q", integers, plain decimals and scientific notation
// ("0.25", "-3", "7/12", "1e-20", "2.5e3").  Every accepted string denotes a
// rational exactly; nothing is rounded.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("bad rational '" + text + "'");
        try {
            Rational q(mpz_class(num), mpz_class(den));
            if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational '" + text + "'");
        }
    }

    // [sign] digits [. digits] [e [sign] digits]
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string int_part, frac_part, exp_part;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part.push_back(s[i++]);
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part.push_back(s[i++]);
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_part.push_back(s[i++]);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp_part.push_back(s[i++]);
        if (exp_part.empty() || exp_part == "+" || exp_part == "-")
            throw ParseError("bad exponent in '" + text + "'");
    }
    if (i != s.size() || (int_part.empty() && frac_part.empty()))
        throw ParseError("bad rational '" + text + "'");

    mpz_class mantissa(int_part.empty() ? "0" : int_part);
    for (char d : frac_part) mantissa = mantissa * 10 + (d - '0');
    long exp = exp_part.empty() ? 0 : std::stol(exp_part);
    exp -= static_cast<long>(frac_part.size());

    Rational q(mantissa);
    q *= rational_pow10(exp);
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// |q| as a rational.
inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace sdpcert
