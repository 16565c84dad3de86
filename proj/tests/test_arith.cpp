#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhd/rational_function.hpp"

using lhd::BigInt;
using lhd::BigRational;
using lhd::QPoly;
using lhd::RationalFunction;

namespace {

RationalFunction rf(const std::string& s) { return RationalFunction::parse(s); }

// Random element with small numerator/denominator polynomials; deterministic
// seed per call site.
RationalFunction random_rf(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> cd(-5, 5);
    std::uniform_int_distribution<int> dd(0, max_deg);
    auto poly = [&](bool nonzero) {
        QPoly p;
        do {
            std::vector<BigRational> cs(static_cast<size_t>(dd(rng)) + 1);
            for (auto& c : cs) c = BigRational(cd(rng));
            p = QPoly(std::move(cs));
        } while (nonzero && p.is_zero());
        return p;
    };
    return RationalFunction(poly(false), poly(true));
}

}  // namespace

TEST_CASE("BigRational basics") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(1, -2) == BigRational(-1, 2));
    CHECK((BigRational(1, 3) + BigRational(1, 6)) == BigRational(1, 2));
    CHECK(BigRational::from_string("-7/21") == BigRational(-1, 3));
    CHECK(BigRational(-3, 6).to_string() == "-1/2");
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0, 1), std::domain_error);
}

TEST_CASE("QPoly divrem and gcd") {
    const QPoly q = QPoly::generator();
    const QPoly one(BigRational(1));
    const QPoly a = (q * q - one) * (q + one);          // (q^2-1)(q+1)
    const QPoly b = (q + one) * (q + one);              // (q+1)^2
    const QPoly g = QPoly::gcd(a, b);
    // gcd = (q+1)^2 up to units, primitive with positive lead
    CHECK(g == b);
    auto [quo, rem] = QPoly::divrem(a, q + one);
    CHECK(rem.is_zero());
    CHECK(quo == q * q - one);
    CHECK_THROWS_AS(QPoly::div_exact(q * q + one, q + one), std::domain_error);
}

TEST_CASE("field ops normalize to canonical reduced form") {
    // (1-q)/(1-q^2) == 1/(1+q)
    const RationalFunction f = rf("(1-q)/(1-q^2)");
    CHECK(f == rf("1/(1+q)"));
    CHECK(f.to_string() == "1/(q + 1)");

    // a * 1 == a
    const RationalFunction a = rf("(q^3-2)/(3q+5)");
    CHECK(a * RationalFunction::one() == a);

    // (1 - q^-1) is (q-1)/q; multiplied by q gives q-1
    const RationalFunction b = RationalFunction::one() - RationalFunction::q().pow(-1);
    CHECK(b == rf("(q-1)/q"));
    CHECK(b * RationalFunction::q() == rf("q-1"));

    CHECK_THROWS_AS(a / RationalFunction::zero(), std::domain_error);
}

TEST_CASE("canonical form: f*g/g == f for random elements") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const RationalFunction f = random_rf(rng, 4);
        RationalFunction g = random_rf(rng, 4);
        if (g.is_zero()) g = RationalFunction::one();
        CHECK(f * g / g == f);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("serialization round-trips and is deterministic") {
    const RationalFunction f = rf("(1 - q^3)/(q + 1)");
    CHECK(f.to_string() == "(-q^3 + 1)/(q + 1)");
    CHECK(RationalFunction::parse(f.to_string()) == f);

    CHECK(rf("0").to_string() == "0");
    CHECK(rf("3/2").to_string() == "3/2");
    CHECK(rf("-3/2").to_string() == "-3/2");
    CHECK(rf("2*q^2 - q").to_string() == "2*q^2 - q");
    CHECK(rf("1/2 * q").to_string() == "q/2");

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f2 = random_rf(rng, 3);
        CHECK(RationalFunction::parse(f2.to_string()) == f2);
    }
}

TEST_CASE("qpochhammer") {
    using lhd::qpochhammer;
    CHECK(qpochhammer(1, 0) == RationalFunction::one());
    // (q;q)_2 = (1-q)(1-q^2)
    CHECK(qpochhammer(1, 2) == rf("(1-q)(1-q^2)"));
    // (q^0;q)_3 = 0: leading factor 1-1
    CHECK(qpochhammer(0, 3).is_zero());
    for (unsigned n = 1; n <= 5; ++n) CHECK(qpochhammer(0, n).is_zero());
    // negative first power: (q^-1;q)_2 = (1-q^-1)(1-1) = 0
    CHECK(qpochhammer(-1, 2).is_zero());
    CHECK(qpochhammer(-1, 1) == rf("(q-1)/q"));
}

TEST_CASE("lambda_factorial") {
    using lhd::lambda_factorial;
    CHECK(lambda_factorial(0) == RationalFunction::one());
    // n=3: (1+q)(1+q+q^2), the hand expansion of (q;q)_3/(1-q)^3
    CHECK(lambda_factorial(3) == rf("(1+q)(1+q+q^2)"));
    // equals (q;q)_n/(1-q)^n as rational functions
    for (unsigned n = 1; n <= 6; ++n) {
        const RationalFunction quot =
            lhd::qpochhammer(1, n) / (RationalFunction::one() - RationalFunction::q()).pow(n);
        CHECK(lambda_factorial(n) == quot);
    }
    // at q=1 this is n!
    for (unsigned n = 0; n <= 8; ++n) {
        BigInt expect = lhd::big_factorial(n);
        CHECK(lambda_factorial(n).specialize(BigRational(1)) == BigRational(expect));
    }
}

TEST_CASE("specialize") {
    CHECK(rf("(1-q^2)/(1-q)").specialize(BigRational(1)) == BigRational(2));
    CHECK_THROWS_AS(rf("1/(1-q)").specialize(BigRational(1)), std::domain_error);
    // (q;q)_3/(1-q)^3 at q=1 -> 6
    const RationalFunction f =
        lhd::qpochhammer(1, 3) / (RationalFunction::one() - RationalFunction::q()).pow(3);
    CHECK(f.specialize(BigRational(1)) == BigRational(6));
}
