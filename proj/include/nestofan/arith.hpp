#pragma once

// Exact integer and rational scalars shared by every nestofan module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nestofan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed user input (bad JSON, violated preconditions).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline std::optional<std::int64_t> to_int64(const Integer& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return value.convert_to<std::int64_t>();
}

/// Always "p/q" with q > 0 and gcd(p, q) = 1, including integers ("1/1").
inline std::string format_rational(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

/// Accepts "p/q" or a bare integer "p"; whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (part.size() == start)
            throw InputError("malformed rational '" + std::string(text) + "'");
        for (std::size_t k = start; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9')
                throw InputError("malformed rational '" + std::string(text) + "'");
        return Integer(std::string(part[0] == '+' ? part.substr(1) : part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace nestofan
