#pragma once

#include "betaparry/errors.hpp"
#include "betaparry/rational.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

namespace betaparry {

// Dense univariate polynomial over the rationals, coefficients constant-first.
// Invariant: no trailing zero coefficient; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial from_int_coeffs(const std::vector<BigInt>& coeffs) {
        std::vector<Rational> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = Rational(coeffs[i]);
        return Polynomial(std::move(c));
    }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }

    static Polynomial monomial(unsigned deg, const Rational& coeff) {
        std::vector<Rational> c(deg + 1);
        c[deg] = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool has_integer_coeffs() const {
        for (const auto& c : c_)
            if (denominator(c) != 1) return false;
        return true;
    }

    std::vector<BigInt> int_coeffs() const {
        std::vector<BigInt> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            assert(denominator(c_[i]) == 1);
            out[i] = numerator(c_[i]);
        }
        return out;
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial monic() const {
        if (is_zero()) return Polynomial();
        return *this * (Rational(1) / c_.back());
    }

    // Human-readable form, e.g. "x^2 - x - 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            const bool first = out.empty();
            if (!first) out += (c.sign() < 0) ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            Rational a = abs(c);
            const bool unit = (a == 1) && i > 0;
            if (!unit) out += betaparry::to_string(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Quotient and remainder with deg(rem) < deg(b); requires b nonzero.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    assert(!b.is_zero());
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    const Rational lead = b.leading();
    if (static_cast<int>(rem.size()) - 1 < db) return {Polynomial(), a};
    std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lead;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

// Monic gcd over Q[x]; gcd(0, 0) = 0.
inline Polynomial monic_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// p / gcd(p, p'): same roots, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 1) return p.monic();
    Polynomial g = monic_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return divmod(p, g).first.monic();
}

// Sturm chain of a nonzero polynomial; counts distinct real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p) {
        assert(!p.is_zero());
        seq_.push_back(p);
        if (p.degree() >= 1) {
            seq_.push_back(p.derivative());
            while (true) {
                const Polynomial& s0 = seq_[seq_.size() - 2];
                const Polynomial& s1 = seq_.back();
                Polynomial r = divmod(s0, s1).second;
                if (r.is_zero()) break;
                seq_.push_back(-r);
            }
        }
    }

    int variations_at(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& s : seq_) {
            int sg = sign_of(s.eval(x));
            if (sg != 0) {
                if (prev != 0 && sg != prev) ++var;
                prev = sg;
            }
        }
        return var;
    }

    // Number of distinct real roots in (a, b]; requires p(a) != 0.
    int count_open_closed(const Rational& a, const Rational& b) const {
        assert(a <= b);
        assert(sign_of(seq_.front().eval(a)) != 0);
        return variations_at(a) - variations_at(b);
    }

private:
    std::vector<Polynomial> seq_;
};

// Integer polynomial as a bare coefficient vector, constant-first.
using IntPoly = std::vector<BigInt>;

inline bool int_poly_is_monic(const IntPoly& p) { return !p.empty() && p.back() == 1; }

inline int int_poly_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline BigInt int_poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// p(num/den) * den^deg(p), exact in integers; den > 0.
inline BigInt int_poly_eval_scaled(const IntPoly& p, const BigInt& num, const BigInt& den) {
    assert(!p.empty());
    BigInt r = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) r = r * num + p[i] * pow_int(den, static_cast<unsigned>(p.size() - 1 - i));
    return r;
}

inline int int_poly_sign_at(const IntPoly& p, const Rational& x) {
    return sign_of(int_poly_eval_scaled(p, numerator(x), denominator(x)));
}

// Divides p by (x - r) in place; requires p(r) == 0.
inline void int_poly_divide_linear(IntPoly& p, const BigInt& r) {
    IntPoly q(p.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = carry * r + p[i];
        q[i - 1] = carry;
    }
    assert(carry * r + p[0] == 0);
    p = std::move(q);
}

inline std::string int_poly_to_string(const IntPoly& p) {
    return Polynomial::from_int_coeffs(p).to_string();
}

// Certified bounds of sum C_i x^i over x in [lo, hi]; requires 0 <= lo <= hi.
inline std::pair<Rational, Rational> eval_interval_int(const std::vector<BigInt>& C,
                                                       const Rational& lo, const Rational& hi) {
    assert(lo.sign() >= 0 && lo <= hi);
    Rational L(0), U(0);
    Rational plo(1), phi(1);
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (i > 0) {
            plo *= lo;
            phi *= hi;
        }
        if (C[i].sign() >= 0) {
            L += plo * C[i];
            U += phi * C[i];
        } else {
            L += phi * C[i];
            U += plo * C[i];
        }
    }
    return {L, U};
}

} // namespace betaparry
