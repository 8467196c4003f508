#pragma once

#include "betaparry/number_field.hpp"
#include "betaparry/rational.hpp"

#include <string>

namespace betaparry {

namespace detail {

inline std::string decimal_from_scaled(BigInt scaled, unsigned digits) {
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (digits == 0) s.pop_back();
    return (neg ? "-" : "") + s;
}

} // namespace detail

// Decimal expansion rounded to nearest after `digits` places, halves up.
inline std::string decimal_string(const Rational& r, unsigned digits) {
    BigInt scaled = floor_rat(r * pow_int(BigInt(10), digits) + Rational(1, 2));
    return detail::decimal_from_scaled(scaled, digits);
}

// Certified rounded decimal of the element's value: the enclosure is refined
// until every point of it rounds to the same string.
inline std::string decimal_string(const FieldElement& a, unsigned digits) {
    if (a.is_rational()) return decimal_string(a.as_rational(), digits);
    const BigInt S = pow_int(BigInt(10), digits);
    const Rational half(1, 2);
    Rational w(1, S * 1000);
    for (int attempt = 0; attempt < 40; ++attempt) {
        auto [L, U] = to_interval(a, w);
        BigInt nl = floor_rat(L * S + half), nu = floor_rat(U * S + half);
        if (nl == nu) return detail::decimal_from_scaled(nl, digits);
        // value may sit exactly on the rounding boundary (2 nu - 1) / (2 S)
        if (attempt >= 8 && sign(a - Rational(2 * nu - 1, 2 * S)) == 0)
            return detail::decimal_from_scaled(nu, digits);
        w /= BigInt(1) << 16;
    }
    // unreachable for well-formed elements; emit the certified lower bound
    auto [L, U] = to_interval(a, w);
    (void)U;
    return detail::decimal_from_scaled(floor_rat(L * S + half), digits);
}

} // namespace betaparry
