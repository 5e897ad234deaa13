#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodseries {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always reduced, denominator > 0 (maintained by the
// backend on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

// Accepts "p" and "p/q" with optional sign on either component; q must be nonzero.
inline Rational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view v) -> Integer {
        if (v.empty()) throw std::invalid_argument("parse_rational: empty integer");
        std::size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
        if (i == v.size()) throw std::invalid_argument("parse_rational: sign without digits");
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9')
                throw std::invalid_argument("parse_rational: invalid character in '" + std::string(v) + "'");
        return Integer(std::string(v));
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(s) + "'");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("rational_pow: zero base with negative exponent");
        return 1 / rational_pow(base, -exp);
    }
    Rational r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

}  // namespace prodseries
