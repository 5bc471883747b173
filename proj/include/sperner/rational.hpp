#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sperner {

// Exact arithmetic carrier for all geometry. cpp_rational keeps values in
// canonical form: gcd(|num|, den) = 1 and den > 0, so value equality is
// representation equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return Rational(Integer(num)) / Rational(Integer(den));
}

// Serialized form is "p/q" in lowest terms with q > 0; integers as "p/1".
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw bad();
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

}  // namespace sperner
