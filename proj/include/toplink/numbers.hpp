#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toplink {

// All decision-path arithmetic in this library is exact. Doubles appear
// only in display helpers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <typename T>
int sgn(const T& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

/// base^e with the convention 0^0 = 1.
inline Int int_pow(Int base, std::uint64_t e) {
    Int result = 1;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

/// base^e for integer e (negative exponents need base != 0).
inline Rat rat_pow(const Rat& base, std::int64_t e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
        const Rat inv = Rat(1) / base;
        return rat_pow(inv, -e);
    }
    Rat result = 1, b = base;
    auto k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= static_cast<std::uint64_t>(n - k + i);
        result /= i;
    }
    return result;
}

/// Parses "p", "-p", or "p/q" (q > 0 after normalization).
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const std::string ns = s.substr(0, slash);
        const std::string ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty())
            throw std::invalid_argument("parse_rational: malformed fraction");
        const Int num(ns), den(ds);
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

/// "p/q" with q > 0; with always_denominator=false integers print as "p".
inline std::string rational_string(const Rat& r, bool always_denominator = true) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1 && !always_denominator) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rat& r) { return static_cast<double>(r); }

} // namespace toplink
