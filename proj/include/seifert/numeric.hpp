#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace seifert {

// Exact arithmetic carriers. Every invariant in this library is an exact
// rational; doubles appear only in the SU(1,1) matrix layer.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base type of every domain error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// cpp_int division truncates toward zero; the index/class normal forms need
// floor semantics (beta mod alpha in [0, alpha) for any sign of beta).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
    return a - floor_div(a, b) * b;
}

/// Reduced "p/q" with positive denominator; "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    return q.str();
}

inline std::string to_string(const Integer& n) {
    return n.str();
}

/// Strict integer parse: optional sign, at least one digit, nothing else.
inline Integer parse_integer(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw ParseError("expected an integer, got \"" + text + "\"");
    std::string token = text.substr(begin, end - begin + 1);
    std::size_t i = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (i == token.size())
        throw ParseError("expected an integer, got \"" + text + "\"");
    for (; i < token.size(); ++i)
        if (token[i] < '0' || token[i] > '9')
            throw ParseError("expected an integer, got \"" + text + "\"");
    return Integer(token);
}

/// Checked narrowing for interfaces that want a machine integer.
inline long long to_int64(const Integer& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw Error("integer out of 64-bit range: " + n.str());
    return n.convert_to<long long>();
}

} // namespace seifert
