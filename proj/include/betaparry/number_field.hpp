#pragma once

#include "betaparry/errors.hpp"
#include "betaparry/polynomial.hpp"
#include "betaparry/rational.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betaparry {

// Inversion hit a zero divisor; carries the discovered modulus factor.
struct NonInvertibleError : Error {
    Polynomial factor;
    explicit NonInvertibleError(Polynomial f)
        : Error("zero divisor; modulus factor " + f.to_string()), factor(std::move(f)) {}
};

namespace detail {

inline bool is_dyadic(const Rational& r) {
    BigInt d = denominator(r);
    return (d & (d - 1)) == 0;
}

// Common denominator form: coeffs[i] == scaled[i] / den.
inline std::pair<std::vector<BigInt>, BigInt> scaled_coeffs(const std::vector<Rational>& c) {
    BigInt den = 1;
    for (const auto& x : c) den = lcm(den, denominator(x));
    std::vector<BigInt> num(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) num[i] = numerator(c[i]) * (den / denominator(c[i]));
    return {std::move(num), std::move(den)};
}

// Shared state of one number field: a monic integer modulus together with a
// certified real root enclosure that only ever shrinks.
struct FieldImpl {
    IntPoly modulus;          // monic, degree >= 1
    Polynomial modulus_q;     // rational copy
    Polynomial sqfree;        // squarefree part, monic integer coefficients
    SturmChain sqfree_chain;  // chain of the squarefree part
    IntPoly deriv;            // derivative of modulus
    int degree;

    mutable std::mutex mu;
    mutable Rational lo, hi;  // dyadic; lo == hi means the root is exactly lo
    mutable int sign_lo = 0;  // sign of modulus at lo when lo < hi

    FieldImpl(IntPoly m, Polynomial mq, Polynomial sf)
        : modulus(std::move(m)),
          modulus_q(std::move(mq)),
          sqfree(std::move(sf)),
          sqfree_chain(sqfree),
          degree(int_poly_degree(modulus)) {
        Polynomial d = modulus_q.derivative();
        deriv = d.int_coeffs();
    }

    std::pair<Rational, Rational> snapshot() const {
        std::lock_guard<std::mutex> g(mu);
        return {lo, hi};
    }

    // One certified shrink step: interval Newton when the derivative sign is
    // constant on the enclosure, bisection otherwise. Endpoints stay dyadic.
    void refine_once_unlocked() const {
        if (lo == hi) return;
        Rational mid = (lo + hi) / 2;
        Rational fm = modulus_q.eval(mid);
        if (fm == 0) { // rational root of a monic integer polynomial
            lo = hi = mid;
            sign_lo = 0;
            return;
        }
        auto [dL, dU] = eval_interval_int(deriv, lo, hi);
        if (dL.sign() > 0 || dU.sign() < 0) {
            Rational n1 = mid - fm / dL;
            Rational n2 = mid - fm / dU;
            Rational nlo = std::min(n1, n2), nhi = std::max(n1, n2);
            if (nlo < lo) nlo = lo;
            if (nhi > hi) nhi = hi;
            if (nlo <= nhi && (nhi - nlo) * 2 <= hi - lo) {
                // round outward to a dyadic grid fine enough to keep the gain
                Rational w = nhi - nlo;
                unsigned k = 4;
                if (w > 0) {
                    BigInt inv = ceil_rat(Rational(8) / w);
                    while ((BigInt(1) << k) < inv) ++k;
                }
                BigInt scale = BigInt(1) << k;
                Rational nlo_scaled = nlo * scale;
                Rational rlo(floor_div(numerator(nlo_scaled), denominator(nlo_scaled)), scale);
                Rational rhi(ceil_rat(nhi * scale), scale);
                if (rlo < lo) rlo = lo;
                if (rhi > hi) rhi = hi;
                if (rlo <= rhi && (rhi - rlo) * 2 <= hi - lo) {
                    int sL = int_poly_sign_at(modulus, rlo);
                    int sH = int_poly_sign_at(modulus, rhi);
                    if (sL == 0) { lo = hi = rlo; sign_lo = 0; return; }
                    if (sH == 0) { lo = hi = rhi; sign_lo = 0; return; }
                    if (sL != sH) { lo = rlo; hi = rhi; sign_lo = sL; return; }
                }
            }
        }
        if (sign_of(fm) == sign_lo) lo = mid;
        else hi = mid;
    }

    void refine_until_width(const Rational& width) const {
        std::lock_guard<std::mutex> g(mu);
        while (hi - lo > width) refine_once_unlocked();
    }

    // Requires a < root < b.
    void refine_inside_open(const Rational& a, const Rational& b) const {
        std::lock_guard<std::mutex> g(mu);
        while (!(a < lo && (hi < b || lo == hi))) refine_once_unlocked();
    }
};

inline std::size_t hash_coeffs(const std::vector<Rational>& c) {
    std::size_t seed = 0;
    for (const auto& x : c) boost::hash_combine(seed, hash_value_of(x));
    return seed;
}

} // namespace detail

class FieldElement;

// Real algebraic number field Q(theta): a monic integer modulus with a
// certified isolating interval for one real root theta > 1.
class NumberField {
public:
    // Certifies at construction: modulus monic with degree >= 1, the interval
    // [lo, hi] with 0 <= lo <= hi isolates exactly one root, and that root
    // exceeds 1. The stored enclosure is refined until its left endpoint
    // exceeds 1 and both endpoints are dyadic.
    NumberField(IntPoly modulus, const Rational& lo, const Rational& hi) {
        if (modulus.empty() || int_poly_degree(modulus) < 1)
            throw std::invalid_argument("modulus must have degree >= 1");
        if (!int_poly_is_monic(modulus)) throw std::invalid_argument("modulus must be monic");
        if (!(0 <= lo && lo <= hi)) throw std::invalid_argument("bad isolating interval");
        Polynomial mq = Polynomial::from_int_coeffs(modulus);
        Polynomial sf = squarefree_part(mq);
        assert(sf.has_integer_coeffs());
        impl_ = std::make_shared<detail::FieldImpl>(std::move(modulus), std::move(mq), std::move(sf));

        if (lo == hi) {
            if (impl_->modulus_q.eval(lo) != 0) throw std::invalid_argument("point interval misses root");
            if (!(lo > 1)) throw std::invalid_argument("root not greater than one");
            impl_->lo = impl_->hi = lo;
            impl_->sign_lo = 0;
            return;
        }
        int sL = int_poly_sign_at(impl_->modulus, lo);
        int sH = int_poly_sign_at(impl_->modulus, hi);
        if (sL == 0 || sH == 0 || sL == sH)
            throw std::invalid_argument("modulus must change sign across the interval");
        SturmChain& chain = impl_->sqfree_chain;
        if (chain.count_open_closed(lo, hi) != 1)
            throw std::invalid_argument("interval does not isolate exactly one root");
        if (lo < 1) {
            Rational one(1);
            Rational cap = hi < one ? hi : one;
            if (chain.count_open_closed(lo, cap) >= 1)
                throw std::invalid_argument("root not greater than one");
        }
        impl_->lo = lo;
        impl_->hi = hi;
        impl_->sign_lo = sL;
        dyadicize();
        impl_->refine_inside_open(Rational(1), impl_->hi + 1);
    }

    int degree() const { return impl_->degree; }
    const IntPoly& modulus() const { return impl_->modulus; }
    const Polynomial& modulus_poly() const { return impl_->modulus_q; }
    std::string modulus_string() const { return impl_->modulus_q.to_string(); }

    // Current certified enclosure of theta; shrinks monotonically over time.
    std::pair<Rational, Rational> root_interval() const { return impl_->snapshot(); }

    void refine_root_interval(const Rational& width) const { impl_->refine_until_width(width); }

    // Requires a < theta < b.
    void refine_inside_open(const Rational& a, const Rational& b) const {
        impl_->refine_inside_open(a, b);
    }

    bool same_field_as(const NumberField& o) const {
        if (impl_ == o.impl_) return true;
        if (impl_->modulus != o.impl_->modulus) return false;
        return same_root_as(o);
    }

    inline FieldElement generator() const;
    inline FieldElement element(std::vector<Rational> coeffs) const;
    inline FieldElement from_rational(const Rational& r) const;
    inline FieldElement zero() const;
    inline FieldElement one() const;

    const std::shared_ptr<detail::FieldImpl>& impl() const { return impl_; }

private:
    bool same_root_as(const NumberField& o) const {
        auto [a1, b1] = impl_->snapshot();
        auto [a2, b2] = o.impl_->snapshot();
        if (a1 == b1) return o.impl_->modulus_q.eval(a1) == 0 && a2 <= a1 && a1 <= b2;
        if (a2 == b2) return impl_->modulus_q.eval(a2) == 0 && a1 <= a2 && a2 <= b1;
        Rational a = std::max(a1, a2), b = std::min(b1, b2);
        if (a >= b) return false;
        return impl_->sqfree_chain.count_open_closed(a, b) == 1;
    }

    // Replace the working enclosure by a nearby dyadic one, re-certified.
    void dyadicize() {
        if (detail::is_dyadic(impl_->lo) && detail::is_dyadic(impl_->hi)) return;
        while (true) {
            Rational w = impl_->hi - impl_->lo;
            BigInt inv = ceil_rat(Rational(4) / w);
            unsigned k = 2;
            while ((BigInt(1) << k) < inv) ++k;
            BigInt scale = BigInt(1) << k;
            Rational dlo(floor_rat(impl_->lo * scale), scale);
            Rational dhi(ceil_rat(impl_->hi * scale), scale);
            if (dlo.sign() >= 0) {
                int sL = int_poly_sign_at(impl_->modulus, dlo);
                int sH = int_poly_sign_at(impl_->modulus, dhi);
                if (sL != 0 && sH != 0 && sL != sH &&
                    impl_->sqfree_chain.count_open_closed(dlo, dhi) == 1) {
                    impl_->lo = dlo;
                    impl_->hi = dhi;
                    impl_->sign_lo = sL;
                    return;
                }
            }
            std::lock_guard<std::mutex> g(impl_->mu);
            impl_->refine_once_unlocked();
            if (impl_->lo == impl_->hi) return;
        }
    }

    std::shared_ptr<detail::FieldImpl> impl_;
};

// Element of a number field as a rational coefficient vector in the power
// basis 1, theta, ..., theta^(d-1).
class FieldElement {
public:
    FieldElement(NumberField field, std::vector<Rational> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        assert(static_cast<int>(c_.size()) == field_.degree());
    }

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // True when the coefficient vector is syntactically rational.
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        assert(is_rational());
        return c_.empty() ? Rational(0) : c_[0];
    }

    Polynomial as_polynomial() const { return Polynomial(c_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        std::vector<Rational> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return FieldElement(a.field_, std::move(c));
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        std::vector<Rational> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return FieldElement(a.field_, std::move(c));
    }

    FieldElement operator-() const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x = -x;
        return FieldElement(field_, std::move(c));
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        const std::size_t d = a.c_.size();
        std::vector<Rational> t(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                t[i + j] += a.c_[i] * b.c_[j];
            }
        }
        reduce_in_place(a.field_, t);
        t.resize(d);
        return FieldElement(a.field_, std::move(t));
    }

    friend FieldElement operator*(const FieldElement& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return FieldElement(a.field_, std::move(c));
    }

    friend FieldElement operator+(const FieldElement& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        c[0] += s;
        return FieldElement(a.field_, std::move(c));
    }

    friend FieldElement operator-(const FieldElement& a, const Rational& s) { return a + (-s); }

    // Structural equality: same field, identical coefficient vectors.
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_.same_field_as(b.field_) && a.c_ == b.c_;
    }

    std::size_t coeff_hash() const { return detail::hash_coeffs(c_); }

private:
    void require_same_field(const FieldElement& b) const {
        if (field_.impl() == b.field_.impl()) return;
        if (!field_.same_field_as(b.field_)) throw FieldMismatchError("elements of distinct fields");
    }

    // Reduces a raw product (length 2d-1) modulo the monic modulus.
    static void reduce_in_place(const NumberField& f, std::vector<Rational>& t) {
        const IntPoly& m = f.modulus();
        const std::size_t d = m.size() - 1;
        for (std::size_t j = t.size(); j-- > d;) {
            if (t[j] == 0) continue;
            Rational v = t[j];
            t[j] = 0;
            for (std::size_t i = 0; i < d; ++i) t[j - d + i] -= v * m[i];
        }
    }

    NumberField field_;
    std::vector<Rational> c_;
};

inline FieldElement NumberField::element(std::vector<Rational> coeffs) const {
    if (static_cast<int>(coeffs.size()) != degree()) throw std::invalid_argument("coefficient count");
    return FieldElement(*this, std::move(coeffs));
}

inline FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[0] = r;
    return FieldElement(*this, std::move(c));
}

inline FieldElement NumberField::zero() const { return from_rational(Rational(0)); }
inline FieldElement NumberField::one() const { return from_rational(Rational(1)); }

inline FieldElement NumberField::generator() const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    if (degree() == 1) c[0] = -Rational(impl_->modulus[0]);
    else c[1] = 1;
    return FieldElement(*this, std::move(c));
}

inline FieldElement pow_element(FieldElement a, unsigned long n) {
    FieldElement r = a.field().one();
    while (n > 0) {
        if (n & 1) r = r * a;
        a = a * a;
        n >>= 1;
    }
    return r;
}

namespace detail {

// Certified rational bounds of the element's real value, width <= max_width.
inline std::pair<Rational, Rational> element_bounds(const FieldElement& a, const Rational& max_width) {
    if (a.is_rational()) {
        Rational v = a.as_rational();
        return {v, v};
    }
    auto [C, D] = scaled_coeffs(a.coeffs());
    std::vector<BigInt> Cd(C.size() > 1 ? C.size() - 1 : 0);
    for (std::size_t i = 1; i < C.size(); ++i) Cd[i - 1] = C[i] * BigInt(i);
    const auto& impl = a.field().impl();
    while (true) {
        auto [lo, hi] = impl->snapshot();
        auto [L, U] = eval_interval_int(C, lo, hi);
        Rational width = (U - L) / D;
        if (width <= max_width || lo == hi) return {L / D, U / D};
        // width ~ |dC/dtheta| * theta_width: aim directly for the target
        auto [dL, dU] = eval_interval_int(Cd, lo, hi);
        Rational slope = std::max(abs(dL), abs(dU)) + 1;
        Rational target = max_width * D / (slope * 2);
        Rational cur = hi - lo;
        if (target > cur / 2) target = cur / 2;
        impl->refine_until_width(target);
    }
}

} // namespace detail

// Certified rational enclosure [lo, hi] of the element's value with
// hi - lo <= width; exact point for rational elements. Requires width > 0.
inline std::pair<Rational, Rational> to_interval(const FieldElement& a, const Rational& width) {
    if (!(width > 0)) throw DomainError("interval width must be positive");
    return detail::element_bounds(a, width);
}

// Exact sign of the element's real value. Total: a vanishing value is
// certified through a gcd with the modulus once refinement gets tight.
inline int sign(const FieldElement& a) {
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sign_of(a.as_rational());
    auto [C, D] = detail::scaled_coeffs(a.coeffs());
    const auto& impl = a.field().impl();
    bool gcd_checked = false;
    const Rational gcd_threshold = dyadic_unit(96);
    while (true) {
        auto [lo, hi] = impl->snapshot();
        if (lo == hi) return sign_of(a.as_polynomial().eval(lo));
        auto [L, U] = eval_interval_int(C, lo, hi);
        if (L.sign() > 0) return 1;
        if (U.sign() < 0) return -1;
        if (!gcd_checked && hi - lo < gcd_threshold) {
            gcd_checked = true;
            Polynomial g = monic_gcd(a.as_polynomial(), impl->modulus_q);
            if (g.degree() >= 1 && SturmChain(squarefree_part(g)).count_open_closed(lo, hi) == 1)
                return 0;
            // theta is no root of g, so the value is nonzero and refinement decides
        }
        impl->refine_until_width((hi - lo) / (BigInt(1) << 64));
    }
}

// Exact floor of the element's value.
inline BigInt floor_int(const FieldElement& a) {
    if (a.is_rational()) return floor_rat(a.as_rational());
    auto [L, U] = detail::element_bounds(a, Rational(1, 4));
    BigInt n = floor_rat(L);
    while (true) {
        int s = sign(a - Rational(n + 1));
        if (s < 0) return n;
        if (s == 0) return n + 1;
        ++n;
    }
}

// Certified integer bounds [lo, hi] at scale 2^K with hi - lo <= 3.
inline std::pair<BigInt, BigInt> scaled_enclosure(const FieldElement& a, unsigned K) {
    auto [L, U] = detail::element_bounds(a, dyadic_unit(K + 2));
    BigInt scale = BigInt(1) << K;
    return {floor_rat(L * scale), ceil_rat(U * scale)};
}

// Multiplicative inverse. Throws DivisionByZeroError on the zero element and
// NonInvertibleError (with the discovered factor) on a zero divisor of a
// reducible modulus.
inline FieldElement invert(const FieldElement& a) {
    if (a.is_zero()) throw DivisionByZeroError("inverse of zero");
    const NumberField& f = a.field();
    if (a.is_rational()) return f.from_rational(Rational(1) / a.as_rational());
    Polynomial r0 = f.modulus_poly(), r1 = a.as_polynomial();
    Polynomial s0, s1 = Polynomial::constant(Rational(1));
    while (r1.degree() > 0) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw NonInvertibleError(r0.monic());
    Polynomial inv = s1 * (Rational(1) / r1.coeff(0));
    inv = divmod(inv, f.modulus_poly()).second;
    std::vector<Rational> c(static_cast<std::size_t>(f.degree()));
    for (int i = 0; i < f.degree(); ++i) c[static_cast<std::size_t>(i)] = inv.coeff(i);
    return FieldElement(f, std::move(c));
}

namespace detail {

inline std::vector<Rational> mul_by_generator(const NumberField& f, const std::vector<Rational>& v) {
    const IntPoly& m = f.modulus();
    const std::size_t d = v.size();
    std::vector<Rational> t(d);
    for (std::size_t i = 0; i + 1 < d; ++i) t[i + 1] = v[i];
    const Rational& top = v[d - 1];
    if (top != 0)
        for (std::size_t i = 0; i < d; ++i) t[i] -= top * m[i];
    return t;
}

} // namespace detail

// Characteristic polynomial of the multiplication-by-a map, degree d, monic.
inline Polynomial char_poly(const FieldElement& a) {
    const NumberField& f = a.field();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    // columns of M: coefficients of a * theta^j
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
    std::vector<Rational> col = a.coeffs();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) M[i][j] = col[i];
        if (j + 1 < d) col = detail::mul_by_generator(f, col);
    }
    // Faddeev-LeVerrier
    std::vector<Rational> coeffs(d + 1);
    coeffs[d] = 1;
    std::vector<std::vector<Rational>> N(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) N[i][i] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        std::vector<std::vector<Rational>> Mk(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational s(0);
                for (std::size_t t = 0; t < d; ++t) s += M[i][t] * N[t][j];
                Mk[i][j] = s;
            }
        Rational tr(0);
        for (std::size_t i = 0; i < d; ++i) tr += Mk[i][i];
        Rational ck = -tr / BigInt(k);
        coeffs[d - k] = ck;
        N = std::move(Mk);
        for (std::size_t i = 0; i < d; ++i) N[i][i] += ck;
    }
    return Polynomial(std::move(coeffs));
}

// Minimal monic annihilator of a in Q[x]/(modulus); divides char_poly(a).
inline Polynomial min_poly(const FieldElement& a) {
    const NumberField& f = a.field();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    // Gaussian elimination over the powers 1, a, a^2, ... with combination tracking.
    struct Row {
        std::size_t pivot;
        std::vector<Rational> vec;   // reduced, vec[pivot] == 1
        std::vector<Rational> combo; // expression over original powers
    };
    std::vector<Row> basis;
    std::vector<Rational> power(d);
    power[0] = 1;
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<Rational> vec = power;
        std::vector<Rational> combo(d + 2);
        combo[k] = 1;
        for (const Row& r : basis) {
            const Rational& x = vec[r.pivot];
            if (x == 0) continue;
            Rational factor = x;
            for (std::size_t i = 0; i < d; ++i) vec[i] -= factor * r.vec[i];
            for (std::size_t i = 0; i <= k; ++i) combo[i] -= factor * r.combo[i];
        }
        std::size_t piv = d;
        for (std::size_t i = 0; i < d; ++i)
            if (vec[i] != 0) { piv = i; break; }
        if (piv == d) {
            combo.resize(k + 1);
            return Polynomial(std::move(combo)).monic();
        }
        Rational inv = Rational(1) / vec[piv];
        for (auto& x : vec) x *= inv;
        for (auto& x : combo) x *= inv;
        basis.push_back(Row{piv, std::move(vec), std::move(combo)});
        if (k < d) {
            FieldElement next = FieldElement(f, std::move(power)) * a;
            power = next.coeffs();
        }
    }
    assert(false && "powers 1..d are always dependent");
    return Polynomial();
}

namespace detail {

// Positive lower bound on the distance between distinct real roots of a
// squarefree integer polynomial (Mahler), integer-power conservative form.
inline Rational root_separation_bound(const Polynomial& squarefree) {
    const int d = squarefree.degree();
    if (d <= 1) return Rational(1);
    BigInt den = 1;
    for (const auto& c : squarefree.coeffs()) den = lcm(den, denominator(c));
    BigInt norm2 = 0;
    for (const auto& c : squarefree.coeffs()) {
        BigInt n = numerator(c) * (den / denominator(c));
        norm2 += n * n;
    }
    unsigned du = static_cast<unsigned>(d);
    BigInt b = pow_int(BigInt(d), (du + 3) / 2) * pow_int(norm2, du / 2);
    return Rational(1, b);
}

inline Polynomial min_poly_or_linear(const FieldElement& a) {
    if (a.is_rational()) {
        Rational r = a.as_rational();
        return Polynomial({-r, Rational(1)});
    }
    return min_poly(a);
}

// Evaluates a rational polynomial at a field element.
inline FieldElement eval_poly_at(const Polynomial& p, const FieldElement& a) {
    FieldElement r = a.field().zero();
    for (int i = p.degree(); i >= 0; --i) r = r * a + p.coeff(i);
    return r;
}

} // namespace detail

// Exact equality of values living in possibly different fields.
inline bool equal_cross_field(const FieldElement& a, const FieldElement& b) {
    if (a.field().same_field_as(b.field())) return sign(a - b) == 0;
    if (a.is_rational() && b.is_rational()) return a.as_rational() == b.as_rational();
    Polynomial mu_a = detail::min_poly_or_linear(a);
    Polynomial mu_b = detail::min_poly_or_linear(b);
    Polynomial g = monic_gcd(mu_a, mu_b);
    if (g.degree() < 1) return false;
    if (sign(detail::eval_poly_at(g, a)) != 0) return false;
    if (sign(detail::eval_poly_at(g, b)) != 0) return false;
    if (g.degree() == 1) return true;
    // both values are roots of g: isolate past the separation bound
    Rational w = detail::root_separation_bound(squarefree_part(g)) / 4;
    auto [la, ha] = to_interval(a, w);
    auto [lb, hb] = to_interval(b, w);
    return std::max(la, lb) <= std::min(ha, hb);
}

// Three-way comparison of values in possibly different fields.
inline int cross_compare(const FieldElement& a, const FieldElement& b) {
    if (a.field().same_field_as(b.field())) return sign(a - b);
    if (equal_cross_field(a, b)) return 0;
    Rational w(1, 4);
    while (true) {
        auto [la, ha] = to_interval(a, w);
        auto [lb, hb] = to_interval(b, w);
        if (ha < lb) return -1;
        if (hb < la) return 1;
        w /= 16;
    }
}

// All real roots greater than one of a monic integer polynomial, each as a
// number field over the squarefree, rational-root-free core of the input,
// sorted in increasing root order. Throws NoRootAboveOneError if none exist.
inline std::vector<NumberField> isolate_roots_above_one(const IntPoly& poly) {
    if (poly.empty() || !int_poly_is_monic(poly) || int_poly_degree(poly) < 1)
        throw std::invalid_argument("monic integer polynomial of degree >= 1 required");
    Polynomial sq = squarefree_part(Polynomial::from_int_coeffs(poly));
    assert(sq.has_integer_coeffs());
    IntPoly q = sq.int_coeffs();
    while (q.size() > 1 && q[0] == 0) q.erase(q.begin());

    // integer roots (the only rational roots of a monic integer polynomial)
    std::vector<BigInt> int_roots;
    if (q.size() > 1) {
        BigInt c0 = abs(q[0]);
        std::vector<BigInt> divs;
        for (BigInt i = 1; i * i <= c0; ++i)
            if (c0 % i == 0) {
                divs.push_back(i);
                if (i * i != c0) divs.push_back(c0 / i);
            }
        for (const BigInt& d : divs)
            for (const BigInt& r : {d, BigInt(-d)})
                if (int_poly_eval(q, r) == 0) int_roots.push_back(r);
        for (const BigInt& r : int_roots) int_poly_divide_linear(q, r);
    }

    struct Span {
        Rational lo, hi; // lo == hi for an exact integer root
        bool point;
    };
    std::vector<Span> spans;
    for (const BigInt& r : int_roots)
        if (r > 1) spans.push_back({Rational(r), Rational(r), true});

    IntPoly rem = q;
    if (int_poly_degree(rem) >= 1) {
        Polynomial rp = Polynomial::from_int_coeffs(rem);
        SturmChain chain(rp);
        BigInt maxc = 0;
        for (const auto& c : rem) maxc = std::max(maxc, BigInt(abs(c)));
        Rational B(maxc + 1);
        std::vector<std::pair<Rational, Rational>> work{{Rational(1), B}};
        std::vector<std::pair<Rational, Rational>> isolated;
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            int cnt = chain.count_open_closed(a, b);
            if (cnt == 0) continue;
            if (cnt == 1) {
                isolated.emplace_back(a, b);
                continue;
            }
            Rational mid = (a + b) / 2;
            work.emplace_back(a, mid);
            work.emplace_back(mid, b);
        }
        // shrink each interval away from any stripped integer root inside it
        for (auto& [a, b] : isolated) {
            for (const BigInt& n : int_roots) {
                Rational rn(n);
                while (a < rn && rn < b) {
                    Rational mid = (a + b) / 2;
                    if (int_poly_sign_at(rem, a) != int_poly_sign_at(rem, mid)) b = mid;
                    else a = mid;
                }
            }
            spans.push_back({a, b, false});
        }
    }

    std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        return x.point && !y.point;
    });

    std::vector<NumberField> out;
    for (const Span& s : spans) {
        if (s.point) {
            BigInt n = numerator(s.lo);
            out.emplace_back(IntPoly{-n, BigInt(1)}, s.lo, s.lo);
        } else {
            out.emplace_back(rem, s.lo, s.hi);
        }
    }
    if (out.empty()) throw NoRootAboveOneError("no real root greater than one");
    return out;
}

// Field of the larger root of x^2 - q x - p for 1 <= p <= q, with the
// enclosure strictly inside (q, q+1).
inline NumberField quadratic_family_field(unsigned p, unsigned q) {
    if (!(1 <= p && p <= q)) throw InvalidFamilyError("family parameters require 1 <= p <= q");
    IntPoly m{-BigInt(p), -BigInt(q), BigInt(1)};
    NumberField f(std::move(m), Rational(q), Rational(q + 1));
    f.refine_inside_open(Rational(q), Rational(q + 1));
    return f;
}

} // namespace betaparry
