#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace betaparry {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& n) { return n.sign(); }
inline int sign_of(const Rational& r) { return r.sign(); }

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rational pow_rat(const Rational& base, unsigned exp) {
    return Rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

// Floor of a/b for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b; // truncates toward zero
    if (a.sign() < 0 && q * b != a) --q;
    return q;
}

inline BigInt floor_rat(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rat(const Rational& r) {
    return -floor_div(-numerator(r), denominator(r));
}

// 1 / 2^k
inline Rational dyadic_unit(unsigned k) {
    return Rational(1, BigInt(1) << k);
}

inline std::size_t hash_value_of(const Rational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, numerator(r));
    boost::hash_combine(seed, denominator(r));
    return seed;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace betaparry
