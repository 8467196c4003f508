#pragma once

#include "betaparry/dynamics.hpp"
#include "betaparry/errors.hpp"
#include "betaparry/number_field.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace betaparry {

// Right-continuous step function on [0,1) with values in one number field.
// Canonical form: interior breakpoints strictly increasing inside (0,1),
// adjacent segment values distinct.
class StepFunction {
public:
    // Breakpoints must be strictly increasing inside (0,1); values[i] is the
    // value on the i-th segment. Adjacent equal values are merged.
    StepFunction(NumberField field, std::vector<FieldElement> breakpoints,
                 std::vector<FieldElement> values)
        : field_(std::move(field)), breaks_(std::move(breakpoints)), values_(std::move(values)) {
        if (values_.size() != breaks_.size() + 1)
            throw std::invalid_argument("need exactly one more value than breakpoints");
        for (const auto& b : breaks_) {
            if (!b.field().same_field_as(field_)) throw FieldMismatchError("breakpoint field");
            if (sign(b) <= 0 || sign(b - Rational(1)) >= 0)
                throw DomainError("breakpoints must lie strictly inside (0,1)");
        }
        for (const auto& v : values_)
            if (!v.field().same_field_as(field_)) throw FieldMismatchError("value field");
        for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (sign(breaks_[i + 1] - breaks_[i]) <= 0)
                throw std::invalid_argument("breakpoints must be strictly increasing");
        merge_equal_adjacent();
    }

    static StepFunction constant(const NumberField& f, FieldElement value) {
        return StepFunction(f, {}, {std::move(value)});
    }

    const NumberField& field() const { return field_; }
    std::size_t segment_count() const { return values_.size(); }
    const std::vector<FieldElement>& breakpoints() const { return breaks_; }
    const std::vector<FieldElement>& values() const { return values_; }

    // Value at x in [0,1).
    FieldElement evaluate(const FieldElement& x) const {
        if (sign(x) < 0 || sign(x - Rational(1)) >= 0) throw DomainError("point outside [0,1)");
        // first breakpoint strictly greater than x
        std::size_t lo = 0, hi = breaks_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (sign(breaks_[mid] - x) > 0) hi = mid;
            else lo = mid + 1;
        }
        return values_[lo];
    }

private:
    void merge_equal_adjacent() {
        std::vector<FieldElement> nb, nv;
        nv.push_back(values_[0]);
        for (std::size_t i = 0; i < breaks_.size(); ++i) {
            if (sign(values_[i + 1] - nv.back()) != 0) {
                nb.push_back(breaks_[i]);
                nv.push_back(values_[i + 1]);
            }
        }
        breaks_ = std::move(nb);
        values_ = std::move(nv);
    }

    NumberField field_;
    std::vector<FieldElement> breaks_;
    std::vector<FieldElement> values_;
};

namespace detail {

// Per-point weights of the unnormalized density: beta^(-n) for preperiod
// points, beta^L/(beta^L - 1) * beta^(-n) for period points of length L.
inline std::vector<std::pair<FieldElement, FieldElement>> density_contributions(
    const OrbitDescriptor& o) {
    const NumberField& f = o.beta.field();
    FieldElement invb = invert(o.beta);
    std::vector<std::pair<FieldElement, FieldElement>> out;
    FieldElement w = f.one();
    for (const FieldElement& p : o.preperiod) {
        w = w * invb;
        out.emplace_back(p, w);
    }
    if (!o.period.empty()) {
        FieldElement bl = pow_element(o.beta, static_cast<unsigned long>(o.period.size()));
        FieldElement factor = bl * invert(bl - Rational(1));
        for (const FieldElement& p : o.period) {
            w = w * invb;
            out.emplace_back(p, factor * w);
        }
    }
    return out;
}

} // namespace detail

// Unnormalized invariant density h(x) = 1 + sum over orbit points t > x of the
// point's weight. Requires a classified orbit.
inline StepFunction build_density(const OrbitDescriptor& o) {
    if (!o.classified()) throw IncompleteOrbitError("density requires a classified orbit");
    const NumberField& f = o.beta.field();
    auto contrib = detail::density_contributions(o);
    std::sort(contrib.begin(), contrib.end(),
              [](const auto& a, const auto& b) { return sign(a.first - b.first) < 0; });
    std::vector<FieldElement> breaks, values;
    breaks.reserve(contrib.size());
    for (const auto& [p, c] : contrib) breaks.push_back(p);
    FieldElement acc = f.one();
    values.assign(contrib.size() + 1, acc);
    for (std::size_t i = contrib.size(); i-- > 0;) {
        acc = acc + contrib[i].second;
        values[i] = acc;
    }
    return StepFunction(f, std::move(breaks), std::move(values));
}

// Exact integral over [0,1).
inline FieldElement integral(const StepFunction& h) {
    const NumberField& f = h.field();
    FieldElement total = f.zero();
    FieldElement prev = f.zero();
    for (std::size_t i = 0; i < h.segment_count(); ++i) {
        FieldElement next = (i < h.breakpoints().size()) ? h.breakpoints()[i] : f.one();
        total = total + h.values()[i] * (next - prev);
        prev = next;
    }
    return total;
}

// Exact integral over [lo, hi] for 0 <= lo <= hi <= 1.
inline FieldElement integral_over(const StepFunction& h, const FieldElement& lo,
                                  const FieldElement& hi) {
    const NumberField& f = h.field();
    if (sign(lo) < 0 || sign(hi - Rational(1)) > 0 || sign(hi - lo) < 0)
        throw DomainError("integration bounds must satisfy 0 <= lo <= hi <= 1");
    FieldElement total = f.zero();
    FieldElement prev = f.zero();
    for (std::size_t i = 0; i < h.segment_count(); ++i) {
        FieldElement next = (i < h.breakpoints().size()) ? h.breakpoints()[i] : f.one();
        FieldElement a = sign(prev - lo) > 0 ? prev : lo;
        FieldElement b = sign(next - hi) < 0 ? next : hi;
        if (sign(b - a) > 0) total = total + h.values()[i] * (b - a);
        prev = next;
    }
    return total;
}

// Normalization constant via the orbit series: 1 + sum T^n(1) * weight(n),
// which equals the integral of the unnormalized density.
inline FieldElement series_normalization(const OrbitDescriptor& o) {
    if (!o.classified()) throw IncompleteOrbitError("series requires a classified orbit");
    FieldElement total = o.beta.field().one();
    for (const auto& [p, c] : detail::density_contributions(o)) total = total + p * c;
    return total;
}

inline FieldElement series_K(const OrbitDescriptor& o) { return series_normalization(o); }

// Scales to total mass one. Throws ZeroMassError when the integral vanishes.
inline StepFunction normalize(const StepFunction& h) {
    FieldElement k = integral(h);
    if (sign(k) == 0) throw ZeroMassError("cannot normalize zero total mass");
    FieldElement inv = invert(k);
    std::vector<FieldElement> values;
    values.reserve(h.segment_count());
    for (const auto& v : h.values()) values.push_back(v * inv);
    return StepFunction(h.field(), h.breakpoints(), std::move(values));
}

namespace detail {

inline bool values_equal(const FieldElement& a, const FieldElement& b) {
    if (a.field().same_field_as(b.field())) return sign(a - b) == 0;
    return equal_cross_field(a, b);
}

} // namespace detail

// Pointwise equality of step functions, possibly over different fields;
// canonical form makes this a finite comparison.
inline bool equal(const StepFunction& f, const StepFunction& g) {
    if (f.segment_count() != g.segment_count()) return false;
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
        if (!detail::values_equal(f.breakpoints()[i], g.breakpoints()[i])) return false;
    for (std::size_t i = 0; i < f.segment_count(); ++i)
        if (!detail::values_equal(f.values()[i], g.values()[i])) return false;
    return true;
}

} // namespace betaparry
