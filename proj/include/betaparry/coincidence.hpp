#pragma once

#include "betaparry/density.hpp"
#include "betaparry/dynamics.hpp"
#include "betaparry/errors.hpp"
#include "betaparry/number_field.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace betaparry {

enum class CoincidenceVerdict { Coincide, Differ, Unknown };

inline const char* to_string(CoincidenceVerdict v) {
    switch (v) {
        case CoincidenceVerdict::Coincide: return "coincide";
        case CoincidenceVerdict::Differ: return "differ";
        default: return "unknown";
    }
}

// Density coefficient lists of both orbits when exactly one orbit hits zero:
// the zero-hitting side contributes beta^(-k) for k = 1..m, the other side its
// preperiod weights and its cycle-corrected period weights.
struct CoefficientSetsReport {
    std::vector<FieldElement> zero_side;
    std::vector<FieldElement> other_preperiod;
    std::vector<FieldElement> other_period;
    bool equal_as_sets = false;
};

// Full diagnostics of one coincidence decision; bases are stored with
// beta1 < beta2 regardless of argument order.
struct CoincidenceReport {
    FieldElement beta1, beta2;
    long budget;
    CoincidenceVerdict verdict;
    OrbitDescriptor orbit1, orbit2;
    std::optional<FieldElement> k1, k2; // normalization constants
    bool k_equal = false;
    bool orbit_sets_match = false; // nonzero orbit points agree as sets
    bool zero_in_first = false;
    bool zero_in_second = false;
    bool zero_in_exactly_one = false;
    std::optional<std::pair<unsigned, unsigned>> family; // (p,q) for beta1
    bool beta2_is_beta1_plus_one = false;
    std::optional<CoefficientSetsReport> coefficient_sets;
    // sum_{k=0}^{m} beta1^(-k) == beta2/(beta2-1), the density value at zero
    std::optional<bool> zero_value_identity;

    bool coincide() const { return verdict == CoincidenceVerdict::Coincide; }
};

// Both bases of the quadratic family (p,q): the root beta1 of x^2 - q x - p
// in (q, q+1) and beta2 = beta1 + 1, as elements of one field.
inline std::pair<FieldElement, FieldElement> family_pair(unsigned p, unsigned q) {
    NumberField f = quadratic_family_field(p, q);
    FieldElement b1 = f.generator();
    return {b1, b1 + Rational(1)};
}

inline std::pair<FieldElement, FieldElement> make_pair(unsigned p, unsigned q) {
    return family_pair(p, q);
}

namespace detail {

inline void require_coincidence_operands(const FieldElement& b1, const FieldElement& b2) {
    for (const FieldElement* b : {&b1, &b2}) {
        if (sign(*b - Rational(1)) <= 0) throw DomainError("bases must exceed one");
        if (sign(*b - Rational(floor_int(*b))) == 0) throw IntegerBaseError("integer base");
    }
    if (equal_cross_field(b1, b2)) throw EqualBasesError("bases must be distinct");
}

// Minimal polynomial of the element's value with integer roots other than the
// value itself divided out; exact for values of degree <= 3 over any modulus.
inline Polynomial value_min_poly(const FieldElement& a) {
    Polynomial mu = min_poly_or_linear(a);
    if (mu.degree() <= 1) return mu;
    while (mu.degree() >= 2 && mu.has_integer_coeffs()) {
        IntPoly m = mu.int_coeffs();
        bool stripped = false;
        BigInt c0 = abs(m[0]);
        if (c0 == 0) {
            if (sign(a) != 0) {
                IntPoly q = m;
                q.erase(q.begin());
                mu = Polynomial::from_int_coeffs(q);
                stripped = true;
            }
        } else {
            for (BigInt i = 1; i * i <= c0 && !stripped; ++i) {
                if (c0 % i != 0) continue;
                std::vector<BigInt> cands{i, -i};
                if (i * i != c0) {
                    cands.push_back(c0 / i);
                    cands.push_back(-c0 / i);
                }
                for (const BigInt& r : cands) {
                    if (int_poly_eval(m, r) != 0) continue;
                    if (sign(a - Rational(r)) == 0) continue;
                    IntPoly q = m;
                    int_poly_divide_linear(q, r);
                    mu = Polynomial::from_int_coeffs(q);
                    stripped = true;
                    break;
                }
            }
        }
        if (!stripped) break;
    }
    return mu;
}

inline std::vector<FieldElement> sorted_nonzero_points(const OrbitDescriptor& o) {
    std::vector<FieldElement> pts(o.preperiod);
    pts.insert(pts.end(), o.period.begin(), o.period.end());
    std::sort(pts.begin(), pts.end(),
              [](const FieldElement& a, const FieldElement& b) { return sign(a - b) < 0; });
    return pts;
}

inline bool element_sets_equal(const std::vector<FieldElement>& a,
                               const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!values_equal(a[i], b[i])) return false;
    return true;
}

// Sorted distinct density coefficients of one orbit side.
inline std::vector<FieldElement> sorted_distinct(std::vector<FieldElement> v) {
    std::sort(v.begin(), v.end(),
              [](const FieldElement& a, const FieldElement& b) { return sign(a - b) < 0; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const FieldElement& a, const FieldElement& b) {
                            return sign(a - b) == 0;
                        }),
            v.end());
    return v;
}

} // namespace detail

// Decides whether the value of beta is the larger root of x^2 - q x - p with
// integers 1 <= p <= q, returning (p, q) when so. Assumes beta > 1.
inline std::optional<std::pair<unsigned, unsigned>> classify_family(const FieldElement& beta) {
    Polynomial mu = detail::value_min_poly(beta);
    if (mu.degree() != 2 || !mu.has_integer_coeffs()) return std::nullopt;
    BigInt q = -numerator(mu.coeff(1));
    BigInt p = -numerator(mu.coeff(0));
    if (p < 1 || q < 1 || p > q) return std::nullopt;
    return std::make_pair(static_cast<unsigned>(p.convert_to<unsigned long>()),
                          static_cast<unsigned>(q.convert_to<unsigned long>()));
}

// Characterization-side verdict: true exactly when the smaller base is a
// quadratic family root and the larger base exceeds it by one.
inline bool is_family_pair(const FieldElement& beta1, const FieldElement& beta2) {
    detail::require_coincidence_operands(beta1, beta2);
    const bool swapped = cross_compare(beta1, beta2) > 0;
    const FieldElement& lo = swapped ? beta2 : beta1;
    const FieldElement& hi = swapped ? beta1 : beta2;
    if (!classify_family(lo)) return false;
    return equal_cross_field(hi, lo + Rational(1));
}

inline bool theorem_verdict(const FieldElement& beta1, const FieldElement& beta2) {
    return is_family_pair(beta1, beta2);
}

// Measure-side decision with full diagnostics. Orbits that exceed the budget
// yield verdict Unknown.
inline CoincidenceReport coincide(const FieldElement& beta1, const FieldElement& beta2,
                                  long budget) {
    detail::require_coincidence_operands(beta1, beta2);
    const bool swapped = cross_compare(beta1, beta2) > 0;
    const FieldElement& b1 = swapped ? beta2 : beta1;
    const FieldElement& b2 = swapped ? beta1 : beta2;

    OrbitDescriptor o1 = orbit_of_one(b1, budget);
    OrbitDescriptor o2 = orbit_of_one(b2, budget);

    CoincidenceReport r{b1,
                        b2,
                        budget,
                        CoincidenceVerdict::Unknown,
                        o1,
                        o2,
                        std::nullopt,
                        std::nullopt};
    r.family = classify_family(b1);
    r.beta2_is_beta1_plus_one = equal_cross_field(b2, b1 + Rational(1));
    if (!o1.classified() || !o2.classified()) return r;

    StepFunction h1 = build_density(o1);
    StepFunction h2 = build_density(o2);
    r.k1 = integral(h1);
    r.k2 = integral(h2);
    r.k_equal = equal_cross_field(*r.k1, *r.k2);
    const bool same = equal(normalize(h1), normalize(h2));
    r.verdict = same ? CoincidenceVerdict::Coincide : CoincidenceVerdict::Differ;

    r.orbit_sets_match = detail::element_sets_equal(detail::sorted_nonzero_points(o1),
                                                    detail::sorted_nonzero_points(o2));
    r.zero_in_first = o1.hits_zero;
    r.zero_in_second = o2.hits_zero;
    r.zero_in_exactly_one = o1.hits_zero != o2.hits_zero;

    if (r.zero_in_exactly_one) {
        const OrbitDescriptor& oz = o1.hits_zero ? o1 : o2;
        const OrbitDescriptor& oo = o1.hits_zero ? o2 : o1;
        CoefficientSetsReport cs;
        for (const auto& [p, c] : detail::density_contributions(oz)) {
            (void)p;
            cs.zero_side.push_back(c);
        }
        auto other = detail::density_contributions(oo);
        for (std::size_t i = 0; i < other.size(); ++i) {
            if (i < oo.preperiod.size()) cs.other_preperiod.push_back(other[i].second);
            else cs.other_period.push_back(other[i].second);
        }
        std::vector<FieldElement> other_all = cs.other_preperiod;
        other_all.insert(other_all.end(), cs.other_period.begin(), cs.other_period.end());
        cs.equal_as_sets = detail::element_sets_equal(detail::sorted_distinct(cs.zero_side),
                                                      detail::sorted_distinct(other_all));
        r.coefficient_sets = std::move(cs);

        // density value at zero: 1 + sum of coefficients on each side
        const FieldElement& bz = oz.beta;
        const FieldElement& bo = oo.beta;
        FieldElement lhs = bz.field().one();
        for (const auto& c : r.coefficient_sets->zero_side) lhs = lhs + c;
        FieldElement rhs = bo * invert(bo - Rational(1));
        r.zero_value_identity = equal_cross_field(lhs, rhs);
    }
    return r;
}

// Whether the quadratic family base (p,q) is a Pisot algebraic integer: monic
// integer minimal polynomial with the conjugate root strictly inside (-1, 1).
inline bool is_pisot_quadratic(unsigned p, unsigned q) {
    NumberField f = quadratic_family_field(p, q);
    FieldElement beta = f.generator();
    FieldElement conj = -beta + Rational(q); // root sum is q
    return sign(conj - Rational(1)) < 0 && sign(conj + Rational(1)) > 0;
}

// Smallest exponents (n, m), ordered by n+m then n, with beta1^n == beta2^m
// and 1 <= n, m <= bound.
inline std::optional<std::pair<unsigned, unsigned>> multiplicative_dependence(
    const FieldElement& beta1, const FieldElement& beta2, unsigned bound) {
    if (bound < 1) throw DomainError("bound must be positive");
    if (sign(beta1 - Rational(1)) <= 0 || sign(beta2 - Rational(1)) <= 0)
        throw DomainError("bases must exceed one");
    std::vector<FieldElement> p1{beta1.field().one()}, p2{beta2.field().one()};
    for (unsigned i = 1; i <= bound; ++i) {
        p1.push_back(p1.back() * beta1);
        p2.push_back(p2.back() * beta2);
    }
    for (unsigned s = 2; s <= 2 * bound; ++s) {
        unsigned n_lo = s > bound ? s - bound : 1;
        unsigned n_hi = std::min(bound, s - 1);
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            unsigned m = s - n;
            if (equal_cross_field(p1[n], p2[m])) return std::make_pair(n, m);
        }
    }
    return std::nullopt;
}

} // namespace betaparry
