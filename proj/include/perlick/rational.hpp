#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace perlick {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// "p/q" or "p" with optional sign. Decimal points are rejected: callers that
/// need exactness must not silently accept 0.5 for 1/2.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    auto slash = text.find('/');
    auto is_int = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return boost::multiprecision::cpp_int(std::string(s));
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text)) fail();
        return Rational(to_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') fail();
    auto d = to_int(den);
    if (d == 0) fail();
    return Rational(to_int(num), d);
}

/// Like parse_rational, but also accepts decimal notation ("1.5", "2.5e-1"),
/// converted exactly: 1.5 becomes 3/2.
inline Rational parse_exact_decimal(std::string_view text)
{
    if (text.find('/') != std::string_view::npos) return parse_rational(text);
    auto fail = [&] { throw std::invalid_argument("not a number: '" + std::string(text) + "'"); };
    std::string_view body = text;
    long exponent = 0;
    auto e = body.find_first_of("eE");
    if (e != std::string_view::npos) {
        std::string ex(body.substr(e + 1));
        if (ex.empty()) fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(ex, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != ex.size() || std::abs(exponent) > 400) fail();
        body = body.substr(0, e);
    }
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    std::string digits;
    bool seen_point = false, seen_digit = false;
    for (char c : body) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) --exponent;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    Rational value{boost::multiprecision::cpp_int(digits)};
    const Rational ten(10);
    for (long i = 0; i < std::abs(exponent); ++i) {
        if (exponent > 0)
            value *= ten;
        else
            value /= ten;
    }
    return negative ? Rational(-value) : value;
}

/// Integer-or-fraction form, e.g. "7/4" or "3".
inline std::string to_string(const Rational& x)
{
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace perlick
