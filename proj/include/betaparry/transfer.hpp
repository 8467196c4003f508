#pragma once

#include "betaparry/density.hpp"
#include "betaparry/errors.hpp"
#include "betaparry/number_field.hpp"

#include <algorithm>
#include <vector>

namespace betaparry {

// Transfer operator of the beta-transformation applied to a step function:
// (Lf)(x) = (1/beta) * sum over branches k with x < beta - k of f((x+k)/beta).
// The result is again a step function; its breakpoint candidates are the
// preimages beta*b - k of f's breakpoints plus the branch cut beta - floor(beta).
inline StepFunction transfer_operator(const FieldElement& beta, const StepFunction& f) {
    if (sign(beta - Rational(1)) <= 0) throw DomainError("base must exceed one");
    if (!beta.field().same_field_as(f.field())) throw FieldMismatchError("base field");
    const NumberField& field = f.field();
    const BigInt fl = floor_int(beta);
    FieldElement invb = invert(beta);
    FieldElement frac = beta - Rational(fl);

    std::vector<FieldElement> cuts;
    if (sign(frac) > 0) cuts.push_back(frac); // frac < 1 always
    for (BigInt k = 0; k <= fl; ++k)
        for (const FieldElement& b : f.breakpoints()) {
            FieldElement c = beta * b - Rational(k);
            if (sign(c) > 0 && sign(c - Rational(1)) < 0) cuts.push_back(c);
        }
    std::sort(cuts.begin(), cuts.end(),
              [](const FieldElement& a, const FieldElement& b) { return sign(a - b) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const FieldElement& a, const FieldElement& b) {
                               return sign(a - b) == 0;
                           }),
               cuts.end());

    // Lf is constant on each segment; evaluate at the segment midpoint.
    std::vector<FieldElement> values;
    values.reserve(cuts.size() + 1);
    const Rational half(1, 2);
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        FieldElement lo = (i == 0) ? field.zero() : cuts[i - 1];
        FieldElement hi = (i == cuts.size()) ? field.one() : cuts[i];
        FieldElement rep = (lo + hi) * half;
        FieldElement acc = field.zero();
        for (BigInt k = 0; k < fl; ++k) acc = acc + f.evaluate((rep + Rational(k)) * invb);
        if (sign(frac - rep) > 0) acc = acc + f.evaluate((rep + Rational(fl)) * invb);
        values.push_back(acc * invb);
    }
    return StepFunction(field, std::move(cuts), std::move(values));
}

// Exact verdict on whether f is a fixed point of the transfer operator.
inline bool check_invariance(const FieldElement& beta, const StepFunction& f) {
    return equal(transfer_operator(beta, f), f);
}

} // namespace betaparry
