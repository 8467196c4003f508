#include "catch_amalgamated.hpp"

#include "betaparry/dynamics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

using namespace betaparry;

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

FieldElement root_of(const IntPoly& p, std::size_t index = 0) {
    return isolate_roots_above_one(p).at(index).generator();
}

// Every stored point satisfies t_n = beta * t_{n-1} - d_n and lies in [0,1);
// the digit identity telescopes to T^n(1) = beta^n - sum d_k beta^(n-k).
void check_orbit_identities(const OrbitDescriptor& o, std::size_t max_n = 12) {
    FieldElement prev = o.beta.field().one();
    std::size_t stored = o.preperiod.size() + o.period.size();
    for (std::size_t n = 1; n <= stored; ++n) {
        FieldElement t = o.point(n);
        REQUIRE(sign(t) >= 0);
        REQUIRE(sign(t - Rational(1)) < 0);
        if (n - 1 < o.digits.size()) {
            FieldElement expect = o.beta * prev - Rational(o.digits[n - 1]);
            REQUIRE(sign(t - expect) == 0);
        }
        prev = t;
        if (n >= max_n) break;
    }
    for (std::size_t k = 1; k < o.digits.size(); ++k) {
        REQUIRE(o.digits[k] >= 0);
        REQUIRE(o.digits[k] <= floor_int(o.beta));
    }
}

} // namespace

TEST_CASE("golden base orbit hits zero after two steps") {
    FieldElement g = root_of(IntPoly{-1, -1, 1});
    OrbitDescriptor o = orbit_of_one(g, 100);
    REQUIRE(o.classification == OrbitClass::SimpleParry);
    REQUIRE(o.hits_zero);
    REQUIRE(o.digits == std::vector<BigInt>{1, 1});
    REQUIRE(o.preperiod.size() == 1);
    REQUIRE(o.period.empty());
    REQUIRE(o.preperiod[0].coeffs() == std::vector<Rational>{Rational(-1), Rational(1)});
    REQUIRE(o.point(2).is_zero());
    REQUIRE(o.point(5).is_zero());
    check_orbit_identities(o);

    auto set = orbit_set(o);
    REQUIRE(set.size() == 2);
    REQUIRE(set[0].is_zero());
    REQUIRE(sign(set[1] - (g - Rational(1))) == 0);
}

TEST_CASE("golden square orbit is purely periodic") {
    FieldElement b = root_of(IntPoly{1, -3, 1});
    OrbitDescriptor o = orbit_of_one(b, 100);
    REQUIRE(o.classification == OrbitClass::Parry);
    REQUIRE_FALSE(o.hits_zero);
    REQUIRE(o.digits == std::vector<BigInt>{2, 1});
    REQUIRE(o.preperiod.empty());
    REQUIRE(o.period.size() == 1);
    REQUIRE(sign(o.period[0] - (b - Rational(2))) == 0);
    REQUIRE(sign(o.point(7) - o.period[0]) == 0);
    check_orbit_identities(o);

    auto set = orbit_set(o);
    REQUIRE(set.size() == 1);
}

TEST_CASE("base 1+sqrt2 ends on an exact branch boundary") {
    FieldElement b = root_of(IntPoly{-1, -2, 1});
    OrbitDescriptor o = orbit_of_one(b, 100);
    REQUIRE(o.classification == OrbitClass::SimpleParry);
    REQUIRE(o.digits == std::vector<BigInt>{2, 1});
    REQUIRE(o.preperiod.size() == 1);
    REQUIRE(sign(o.preperiod[0] - (b - Rational(2))) == 0);
    // beta * t_1 = beta^2 - 2 beta = 1 exactly, so the second digit is 1
    REQUIRE(sign(b * o.preperiod[0] - Rational(1)) == 0);
    check_orbit_identities(o);
}

TEST_CASE("plastic base orbit hits zero at step five") {
    FieldElement b = root_of(IntPoly{-1, -1, 0, 1});
    OrbitDescriptor o = orbit_of_one(b, 100);
    REQUIRE(o.classification == OrbitClass::SimpleParry);
    REQUIRE(o.digits == std::vector<BigInt>{1, 0, 0, 0, 1});
    REQUIRE(o.preperiod.size() == 4);
    std::vector<std::vector<Rational>> expect{
        {Rational(-1), Rational(1), Rational(0)},
        {Rational(0), Rational(-1), Rational(1)},
        {Rational(1), Rational(1), Rational(-1)},
        {Rational(-1), Rational(0), Rational(1)},
    };
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(o.preperiod[i].coeffs() == expect[i]);
    check_orbit_identities(o);
}

TEST_CASE("integer value of beta maps one straight to zero") {
    NumberField f = isolate_roots_above_one(IntPoly{-1, -1, 1}).at(0);
    OrbitDescriptor o = orbit_of_one(f.from_rational(Rational(2)), 10);
    REQUIRE(o.classification == OrbitClass::SimpleParry);
    REQUIRE(o.digits == std::vector<BigInt>{2});
    REQUIRE(o.nonzero_count() == 0);
    auto set = orbit_set(o);
    REQUIRE(set.size() == 1);
    REQUIRE(set[0].is_zero());
}

TEST_CASE("aperiodic orbits exhaust the budget") {
    FieldElement s = root_of(IntPoly{-2, 0, 1});
    OrbitDescriptor o = orbit_of_one(s, 60);
    REQUIRE(o.classification == OrbitClass::BudgetExceeded);
    REQUIRE_FALSE(o.classified());
    REQUIRE(o.digits.size() == 60);
    REQUIRE(o.preperiod.size() == 60);
    REQUIRE_THROWS_AS(orbit_set(o), IncompleteOrbitError);
    REQUIRE_THROWS_AS(o.point(61), IncompleteOrbitError);
    check_orbit_identities(o);

    NumberField f = isolate_roots_above_one(IntPoly{-1, -1, 1}).at(0);
    OrbitDescriptor r = orbit_of_one(f.from_rational(Rational(5, 2)), 30);
    REQUIRE(r.classification == OrbitClass::BudgetExceeded);
    REQUIRE(r.digits.size() == 30);
    REQUIRE(r.digits[0] == 2);
    REQUIRE(r.digits[1] == 1);
    REQUIRE(r.digits[2] == 0);
    check_orbit_identities(r);
}

TEST_CASE("orbit digits agree with a high-precision floating replay") {
    for (const IntPoly& p :
         {IntPoly{1, -3, 1}, IntPoly{-3, -3, 1}, IntPoly{-1, 0, -1, 1}, IntPoly{-2, 0, 1}}) {
        NumberField field = isolate_roots_above_one(p).at(0);
        FieldElement beta = field.generator();
        OrbitDescriptor o = orbit_of_one(beta, 64);

        field.refine_root_interval(Rational(1, BigInt(1) << 350));
        auto [lo, hi] = field.root_interval();
        BigFloat bf = (BigFloat(numerator(lo)) / BigFloat(denominator(lo)) +
                       BigFloat(numerator(hi)) / BigFloat(denominator(hi))) /
                      2;
        BigFloat x = 1;
        for (std::size_t n = 0; n < o.digits.size() && n < 40; ++n) {
            BigFloat y = bf * x;
            // stop once y is too close to a branch boundary for float replay
            BigFloat nearest = floor(y + BigFloat(1) / 2);
            if (abs(y - nearest) < BigFloat("1e-60")) break;
            BigFloat fl = floor(y);
            REQUIRE(fl.convert_to<BigInt>() == o.digits[n]);
            x = y - fl;
        }
    }
}

TEST_CASE("single transformation step") {
    NumberField f = isolate_roots_above_one(IntPoly{-1, -1, 1}).at(0);
    FieldElement g = f.generator();

    auto [d0, next0] = step(g, f.zero());
    REQUIRE(d0 == 0);
    REQUIRE(next0.is_zero());

    auto [d1, next1] = step(g, g - Rational(1));
    REQUIRE(d1 == 1);
    REQUIRE(next1.is_zero());

    auto [d2, next2] = step(g, f.from_rational(Rational(1, 2)));
    REQUIRE(d2 == 0);
    REQUIRE(sign(next2 - g * Rational(1, 2)) == 0);

    REQUIRE_THROWS_AS(step(g, f.one()), DomainError);
    REQUIRE_THROWS_AS(step(g, f.from_rational(Rational(-1, 10))), DomainError);
    REQUIRE_THROWS_AS(step(f.one(), f.zero()), DomainError);
    REQUIRE_THROWS_AS(orbit_of_one(g, 0), DomainError);
    REQUIRE_THROWS_AS(orbit_of_one(f.from_rational(Rational(1, 2)), 10), DomainError);
}
