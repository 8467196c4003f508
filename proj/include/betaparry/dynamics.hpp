#pragma once

#include "betaparry/errors.hpp"
#include "betaparry/number_field.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

namespace betaparry {

enum class OrbitClass { SimpleParry, Parry, BudgetExceeded };

inline const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::SimpleParry: return "simple_parry";
        case OrbitClass::Parry: return "parry";
        default: return "budget_exceeded";
    }
}

// Forward orbit of 1 under x -> beta*x mod 1, with T(1) taken as beta mod 1.
// preperiod holds T(1)..T^(l-1)(1) and period holds T^l(1)..T^m(1); both lists
// contain only nonzero points. digits[n-1] = floor(beta * T^(n-1)(1)).
struct OrbitDescriptor {
    FieldElement beta;
    std::vector<FieldElement> preperiod;
    std::vector<FieldElement> period;
    std::vector<BigInt> digits;
    OrbitClass classification;
    bool hits_zero;

    std::size_t nonzero_count() const { return preperiod.size() + period.size(); }

    bool classified() const { return classification != OrbitClass::BudgetExceeded; }

    // T^n(1) for n >= 1, replaying the cycle beyond the stored points.
    FieldElement point(std::size_t n) const {
        assert(n >= 1);
        if (n <= preperiod.size()) return preperiod[n - 1];
        std::size_t k = n - preperiod.size() - 1;
        if (!period.empty()) return period[k % period.size()];
        if (hits_zero) return beta.field().zero();
        throw IncompleteOrbitError("orbit not classified within budget");
    }
};

// One application of the beta-transformation to x in [0,1): returns the digit
// floor(beta*x) and the exact image beta*x - digit.
inline std::pair<BigInt, FieldElement> step(const FieldElement& beta, const FieldElement& x) {
    if (sign(beta - Rational(1)) <= 0) throw DomainError("base must exceed one");
    if (sign(x) < 0 || sign(x - Rational(1)) >= 0) throw DomainError("point outside [0,1)");
    FieldElement y = beta * x;
    BigInt d = floor_int(y);
    return {d, y - Rational(d)};
}

// Orbit of 1, classified as SimpleParry (hits 0), Parry (enters a cycle), or
// BudgetExceeded after `budget` computed points. Digits are determined by a
// certified fixed-point ball over the exact coefficient vectors; the ball is
// refreshed from the exact orbit point when it loses precision, and genuinely
// ambiguous digits (exact boundary hits) fall back to an exact floor.
//
// The exact point is carried as an integer coefficient vector over a common
// denominator: the modulus is monic with integer coefficients, so a step never
// introduces new denominators. This keeps the hot loop in pure cpp_int -- per-
// operation cpp_rational canonicalization is ruinous once orbit coefficients
// grow to thousands of bits.
inline OrbitDescriptor orbit_of_one(const FieldElement& beta, long budget) {
    if (budget < 1) throw DomainError("budget must be positive");
    if (sign(beta - Rational(1)) <= 0) throw DomainError("base must exceed one");

    constexpr unsigned K = 320;
    const BigInt scale_one = BigInt(1) << K;
    const BigInt width_cap = BigInt(1) << (K - 64);

    const NumberField& f = beta.field();
    const IntPoly& m = f.modulus();
    const std::size_t d = static_cast<std::size_t>(f.degree());

    BigInt beta_den = 1;
    for (const Rational& x : beta.coeffs())
        beta_den = lcm(beta_den, BigInt(denominator(x)));
    std::vector<BigInt> beta_num(d);
    for (std::size_t i = 0; i < d; ++i)
        beta_num[i] = numerator(Rational(beta.coeffs()[i] * beta_den));

    auto normalize = [](std::vector<BigInt>& c, BigInt& den) {
        if (den == 1) return;
        BigInt g = den;
        for (const BigInt& x : c) {
            if (g == 1) return;
            g = gcd(g, x);
        }
        if (g > 1) {
            for (BigInt& x : c) x /= g;
            den /= g;
        }
    };
    auto as_element = [&](const std::vector<BigInt>& c, const BigInt& den) {
        std::vector<Rational> r(d);
        for (std::size_t i = 0; i < d; ++i) {
            r[i] = Rational(c[i]);
            if (den != 1) r[i] /= den;
        }
        return f.element(std::move(r));
    };

    auto [blo, bhi] = scaled_enclosure(beta, K);

    BigInt d1 = floor_int(beta);
    std::vector<BigInt> tc = beta_num;
    BigInt tden = beta_den;
    tc[0] -= d1 * tden;
    normalize(tc, tden);
    std::vector<BigInt> digits{d1};

    auto clamp01 = [&](std::pair<BigInt, BigInt> b) {
        if (b.first < 0) b.first = 0;
        if (b.second > scale_one) b.second = scale_one;
        return b;
    };
    auto [tlo, thi] = clamp01(scaled_enclosure(as_element(tc, tden), K));

    struct RawPoint {
        std::vector<BigInt> c;
        BigInt den;
    };
    std::vector<RawPoint> points;
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen; // coeff hash -> indices
    auto raw_hash = [](const std::vector<BigInt>& c, const BigInt& den) {
        std::size_t seed = 0;
        boost::hash_combine(seed, den);
        for (const BigInt& x : c) boost::hash_combine(seed, x);
        return seed;
    };
    auto materialize = [&](std::size_t from, std::size_t to) {
        std::vector<FieldElement> out;
        out.reserve(to - from);
        for (std::size_t i = from; i < to; ++i) out.push_back(as_element(points[i].c, points[i].den));
        return out;
    };

    for (long n = 1;; ++n) {
        if (std::all_of(tc.begin(), tc.end(), [](const BigInt& x) { return x == 0; }))
            return OrbitDescriptor{beta, materialize(0, points.size()), {}, std::move(digits),
                                   OrbitClass::SimpleParry, true};
        std::size_t h = raw_hash(tc, tden);
        if (auto it = seen.find(h); it != seen.end()) {
            for (std::size_t idx : it->second) {
                if (points[idx].den == tden && points[idx].c == tc) {
                    return OrbitDescriptor{beta, materialize(0, idx),
                                           materialize(idx, points.size()), std::move(digits),
                                           OrbitClass::Parry, false};
                }
            }
        }
        seen[h].push_back(points.size());
        points.push_back(RawPoint{tc, tden});
        if (n == budget)
            return OrbitDescriptor{beta, materialize(0, points.size()), {}, std::move(digits),
                                   OrbitClass::BudgetExceeded, false};

        // y = beta * t as a raw convolution reduced by the monic modulus
        std::vector<BigInt> y(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (beta_num[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (tc[j] == 0) continue;
                y[i + j] += beta_num[i] * tc[j];
            }
        }
        for (std::size_t j = y.size(); j-- > d;) {
            if (y[j] == 0) continue;
            BigInt v = std::move(y[j]);
            y[j] = 0;
            for (std::size_t i = 0; i < d; ++i) y[j - d + i] -= v * m[i];
        }
        y.resize(d);
        BigInt yden = tden * beta_den;

        BigInt ylo = (tlo * blo) >> K;
        BigInt yhi = ((thi * bhi) >> K) + 1;
        BigInt dig;
        if ((ylo >> K) == (yhi >> K)) {
            dig = ylo >> K;
        } else {
            std::tie(tlo, thi) = clamp01(scaled_enclosure(as_element(tc, tden), K));
            ylo = (tlo * blo) >> K;
            yhi = ((thi * bhi) >> K) + 1;
            if ((ylo >> K) == (yhi >> K)) dig = ylo >> K;
            else dig = floor_int(as_element(y, yden)); // boundary hit: decide exactly
        }
        tc = std::move(y);
        tden = std::move(yden);
        tc[0] -= dig * tden;
        normalize(tc, tden);
        digits.push_back(dig);
        BigInt off = dig << K;
        tlo = ylo - off;
        thi = yhi - off;
        if (tlo < 0) tlo = 0;
        if (thi > scale_one) thi = scale_one;
        if (thi - tlo > width_cap)
            std::tie(tlo, thi) = clamp01(scaled_enclosure(as_element(tc, tden), K));
    }
}

// Distinct orbit points of a classified orbit, ascending, including 0 when the
// orbit hits it. Throws IncompleteOrbitError for BudgetExceeded orbits.
inline std::vector<FieldElement> orbit_set(const OrbitDescriptor& o) {
    if (!o.classified()) throw IncompleteOrbitError("orbit not classified within budget");
    std::vector<FieldElement> out;
    if (o.hits_zero) out.push_back(o.beta.field().zero());
    out.insert(out.end(), o.preperiod.begin(), o.preperiod.end());
    out.insert(out.end(), o.period.begin(), o.period.end());
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return sign(a - b) < 0; });
    return out;
}

} // namespace betaparry
