#include "catch_amalgamated.hpp"

#include "betaparry/coincidence.hpp"

#include <vector>

using namespace betaparry;

namespace {

FieldElement root_of(const IntPoly& p, std::size_t index = 0) {
    return isolate_roots_above_one(p).at(index).generator();
}

std::vector<Rational> rats(std::initializer_list<long> cs) {
    std::vector<Rational> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

} // namespace

TEST_CASE("family pair construction") {
    auto [b1, b2] = family_pair(1, 1);
    REQUIRE(b1.field().same_field_as(b2.field()));
    REQUIRE(b1.coeffs() == rats({0, 1}));
    REQUIRE(sign(b2 - b1 - Rational(1)) == 0);
    REQUIRE(b1.field().modulus() == IntPoly{-1, -1, 1});

    auto [c1, c2] = make_pair(3, 4);
    REQUIRE(c1.field().modulus() == IntPoly{-3, -4, 1});
    REQUIRE(sign(c2 - c1 - Rational(1)) == 0);
}

TEST_CASE("the smallest family pair coincides with full diagnostics") {
    auto [b1, b2] = family_pair(1, 1);
    CoincidenceReport r = coincide(b1, b2, 100);

    REQUIRE(r.verdict == CoincidenceVerdict::Coincide);
    REQUIRE(r.coincide());
    REQUIRE(std::string(to_string(r.verdict)) == "coincide");

    REQUIRE(r.k1.has_value());
    REQUIRE(r.k2.has_value());
    REQUIRE(r.k1->coeffs() == rats({3, -1}));
    REQUIRE(r.k_equal);

    REQUIRE(r.orbit1.classification == OrbitClass::SimpleParry);
    REQUIRE(r.orbit2.classification == OrbitClass::Parry);
    REQUIRE(r.orbit_sets_match);
    REQUIRE(r.zero_in_first);
    REQUIRE_FALSE(r.zero_in_second);
    REQUIRE(r.zero_in_exactly_one);

    REQUIRE(r.family == std::make_pair(1u, 1u));
    REQUIRE(r.beta2_is_beta1_plus_one);

    REQUIRE(r.coefficient_sets.has_value());
    const CoefficientSetsReport& cs = *r.coefficient_sets;
    REQUIRE(cs.zero_side.size() == 1);
    REQUIRE(cs.zero_side[0].coeffs() == rats({-1, 1})); // 1/beta1 = beta1 - 1
    REQUIRE(cs.other_preperiod.empty());
    REQUIRE(cs.other_period.size() == 1);
    REQUIRE(sign(cs.other_period[0] - cs.zero_side[0]) == 0);
    REQUIRE(cs.equal_as_sets);

    REQUIRE(r.zero_value_identity == true);
}

TEST_CASE("family pair coefficients match for p distinct from q") {
    auto [b1, b2] = family_pair(1, 2);
    CoincidenceReport r = coincide(b1, b2, 100);

    REQUIRE(r.coincide());
    REQUIRE(r.family == std::make_pair(1u, 2u));
    REQUIRE(r.zero_in_exactly_one);
    const CoefficientSetsReport& cs = *r.coefficient_sets;
    REQUIRE(cs.zero_side.size() == 1);
    REQUIRE(cs.zero_side[0].coeffs() == rats({-2, 1})); // 1/(1+sqrt2) = sqrt2 - 1
    REQUIRE(cs.other_period.size() == 1);
    REQUIRE(sign(cs.other_period[0] - cs.zero_side[0]) == 0);
    REQUIRE(cs.equal_as_sets);
    REQUIRE(r.zero_value_identity == true);
}

TEST_CASE("bases outside the family have different measures") {
    FieldElement g = root_of(IntPoly{-1, -1, 1});     // golden
    FieldElement s = root_of(IntPoly{-2, -2, 1});     // 1 + sqrt 3
    CoincidenceReport r = coincide(g, s, 100);

    REQUIRE(r.verdict == CoincidenceVerdict::Differ);
    REQUIRE_FALSE(r.coincide());
    REQUIRE(r.k1.has_value());
    REQUIRE(r.k2.has_value());
    REQUIRE_FALSE(r.k_equal);
    REQUIRE_FALSE(r.orbit_sets_match);
    REQUIRE(r.zero_in_first);
    REQUIRE(r.zero_in_second);
    REQUIRE_FALSE(r.zero_in_exactly_one);
    REQUIRE_FALSE(r.coefficient_sets.has_value());
    REQUIRE_FALSE(r.zero_value_identity.has_value());
    // the smaller base alone is a family root, but the pair is not a family pair
    REQUIRE(r.family == std::make_pair(1u, 1u));
    REQUIRE_FALSE(r.beta2_is_beta1_plus_one);
}

TEST_CASE("budget exhaustion yields an unknown verdict") {
    FieldElement g = root_of(IntPoly{-1, -1, 1});
    FieldElement s = root_of(IntPoly{-2, 0, 1}); // sqrt 2, aperiodic orbit
    CoincidenceReport r = coincide(g, s, 50);

    REQUIRE(r.verdict == CoincidenceVerdict::Unknown);
    REQUIRE(std::string(to_string(r.verdict)) == "unknown");
    REQUIRE_FALSE(r.k1.has_value());
    REQUIRE_FALSE(r.k2.has_value());
    REQUIRE_FALSE(r.coefficient_sets.has_value());
    // report orders bases ascending: sqrt 2 first
    REQUIRE(sign(r.beta1 - Rational(3, 2)) < 0);
    REQUIRE(r.orbit1.classification == OrbitClass::BudgetExceeded);
}

TEST_CASE("reports always store the smaller base first") {
    auto [b1, b2] = family_pair(2, 3);
    CoincidenceReport r = coincide(b2, b1, 100);
    REQUIRE(sign(r.beta2 - r.beta1) > 0);
    REQUIRE(r.coincide());
    REQUIRE(r.family == std::make_pair(2u, 3u));
}

TEST_CASE("coincidence operands are validated") {
    FieldElement g = root_of(IntPoly{-1, -1, 1});
    const NumberField& f = g.field();

    REQUIRE_THROWS_AS(coincide(g, f.from_rational(Rational(2)), 100), IntegerBaseError);
    REQUIRE_THROWS_AS(coincide(f.from_rational(Rational(3)), g, 100), IntegerBaseError);
    REQUIRE_THROWS_AS(coincide(g, f.from_rational(Rational(1, 2)), 100), DomainError);
    REQUIRE_THROWS_AS(is_family_pair(g, f.one()), DomainError);

    // the same value presented through another field is still an equal base
    FieldElement same = root_of(IntPoly{1, -3, 1}) - Rational(1);
    REQUIRE_THROWS_AS(coincide(g, same, 100), EqualBasesError);
    REQUIRE_THROWS_AS(is_family_pair(g, same), EqualBasesError);
}

TEST_CASE("family membership of single bases") {
    REQUIRE(classify_family(root_of(IntPoly{-1, -1, 1})) == std::make_pair(1u, 1u));
    REQUIRE(classify_family(root_of(IntPoly{-2, -2, 1})) == std::make_pair(2u, 2u));
    REQUIRE(classify_family(root_of(IntPoly{-3, -5, 1})) == std::make_pair(3u, 5u));
    REQUIRE_FALSE(classify_family(root_of(IntPoly{1, -3, 1})).has_value()); // p = -1
    REQUIRE_FALSE(classify_family(root_of(IntPoly{-2, 0, 1})).has_value()); // q = 0
    REQUIRE_FALSE(classify_family(root_of(IntPoly{-1, -1, 0, 1})).has_value()); // cubic
    NumberField f = isolate_roots_above_one(IntPoly{-1, -1, 1}).at(0);
    REQUIRE_FALSE(classify_family(f.from_rational(Rational(5, 2))).has_value());

    // sqrt 3 through a reducible degree-four modulus: not a family root
    NumberField quartic = isolate_roots_above_one(IntPoly{6, 0, -5, 0, 1}).at(1);
    REQUIRE_FALSE(classify_family(quartic.generator()).has_value());
}

TEST_CASE("characterization verdict for base pairs") {
    auto [b1, b2] = family_pair(1, 1);
    REQUIRE(is_family_pair(b1, b2));
    REQUIRE(theorem_verdict(b1, b2));
    REQUIRE(theorem_verdict(b2, b1));

    // same pair presented through separate fields
    REQUIRE(is_family_pair(root_of(IntPoly{-1, -1, 1}), root_of(IntPoly{1, -3, 1})));
    REQUIRE(is_family_pair(root_of(IntPoly{-1, -2, 1}), root_of(IntPoly{2, -4, 1})));

    REQUIRE_FALSE(is_family_pair(b1, b1 + Rational(2)));
    REQUIRE_FALSE(is_family_pair(root_of(IntPoly{-1, -2, 1}), root_of(IntPoly{-1, -1, 1})));
    // smaller base not in the family: sqrt 2 + 1 is, sqrt 2 is not
    REQUIRE_FALSE(is_family_pair(root_of(IntPoly{-2, 0, 1}), root_of(IntPoly{-1, -2, 1})));
}

TEST_CASE("family bases are quadratic Pisot numbers") {
    REQUIRE(is_pisot_quadratic(1, 1));
    REQUIRE(is_pisot_quadratic(5, 5));
    REQUIRE(is_pisot_quadratic(20, 20));
    REQUIRE(is_pisot_quadratic(1, 20));
}

TEST_CASE("multiplicative dependence of base pairs") {
    auto [b1, b2] = family_pair(1, 1);
    REQUIRE(multiplicative_dependence(b1, b2, 10) == std::make_pair(2u, 1u));

    auto [c1, c2] = family_pair(1, 2);
    REQUIRE_FALSE(multiplicative_dependence(c1, c2, 10).has_value());
    auto [d1, d2] = family_pair(2, 2);
    REQUIRE_FALSE(multiplicative_dependence(d1, d2, 10).has_value());

    REQUIRE(multiplicative_dependence(b1, b1, 5) == std::make_pair(1u, 1u));
    REQUIRE_THROWS_AS(multiplicative_dependence(b1, b2, 0), DomainError);
    REQUIRE_THROWS_AS(multiplicative_dependence(b1.field().one(), b2, 5), DomainError);
}

TEST_CASE("near-one bases keep one plus beta minus beta^m inside the interval") {
    // Roots of x^(m+1) - x - 1 satisfy T^(m+1)(1) = 1 + beta - beta^m, a
    // nonzero orbit point; the orbit therefore never hits zero at that step.
    struct Case { IntPoly poly; unsigned long m; long budget; };
    for (const Case& c : {Case{IntPoly{-1, -1, 0, 1}, 2, 100},      // cubic, maps to zero later
                          Case{IntPoly{-1, -1, 0, 0, 1}, 3, 50}}) { // quartic, aperiodic
        FieldElement b = root_of(c.poly);
        OrbitDescriptor o = orbit_of_one(b, c.budget);
        FieldElement expect = b.field().one() + b - pow_element(b, c.m);
        FieldElement pt = o.point(c.m + 1);
        REQUIRE(sign(pt - expect) == 0);
        REQUIRE(sign(pt) > 0);
        REQUIRE(sign(pt - Rational(1)) < 0);
    }
}
