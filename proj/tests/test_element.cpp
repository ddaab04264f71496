#include "pineta/dsl.hpp"
#include "pineta/error.hpp"

#include <doctest.h>

#include <random>

using namespace pineta;

namespace {

// Test-only oracle: multiply two degree-2 classes a*u + b*v by raw expansion
// and substitute the quotient relations by hand, independently of the
// library's rewrite machinery.
//   caseI:  u^2 = -u*v, v^2 = 0,    <u*v> = 1  => pairing = a1*b2 + a2*b1 - a1*a2
//   caseII: u*v = -u^2, v^2 = 2u^2, <u^2> = 1  => pairing = a1*a2 - (a1*b2 + a2*b1) + 2*b1*b2
Rational oracle_pairing(const std::string& name, const Rational& a1, const Rational& b1,
                        const Rational& a2, const Rational& b2) {
    Rational cross = a1 * b2 + a2 * b1;
    if (name == "caseI") return cross - a1 * a2;
    return a1 * a2 - cross + 2 * b1 * b2;
}

RingElement deg2(const PresentationPtr& p, const Rational& a, const Rational& b) {
    return a * RingElement::generator(p, "u") + b * RingElement::generator(p, "v");
}

}  // namespace

TEST_CASE("reduction normal forms match the quotient relations") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(ci, "u");
    RingElement v = RingElement::generator(ci, "v");
    RingElement one = RingElement::constant(ci, 1);

    CHECK(u * u == -(u * v));
    CHECK((u * u).str() == "-u*v");
    CHECK(v * v == RingElement::zero(ci));
    CHECK(one * u == u);

    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    RingElement ub = RingElement::generator(cii, "u");
    RingElement vb = RingElement::generator(cii, "v");
    CHECK(vb * vb == Rational(2) * (ub * ub));
    CHECK((vb * vb).str() == "2*u^2");
    CHECK(ub * vb == -(ub * ub));
}

TEST_CASE("products expand and reduce correctly") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement c1 = deg2(ci, -2, 1);
    CHECK((c1 * c1).str() == "-8*u*v");
    CHECK(pair_fundamental(c1 * c1) == -8);

    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    RingElement c2 = deg2(cii, -4, 1);
    CHECK((c2 * c2).str() == "26*u^2");
    CHECK(pair_fundamental(c2 * c2) == 26);

    CHECK(c1 * RingElement::zero(ci) == RingElement::zero(ci));
}

TEST_CASE("pairing reads the orientation coefficient of the top component") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(ci, "u");
    RingElement v = RingElement::generator(ci, "v");

    CHECK(pair_fundamental(u * v) == 1);
    CHECK(pair_fundamental(u * u) == -1);
    CHECK(pair_fundamental(u) == 0);
    CHECK(pair_fundamental(RingElement::constant(ci, 1)) == 0);

    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    RingElement ub = RingElement::generator(cii, "u");
    RingElement vb = RingElement::generator(cii, "v");
    CHECK(pair_fundamental(ub * ub) == 1);
    CHECK(pair_fundamental(ub * vb) == -1);
    CHECK(pair_fundamental(vb * vb) == 2);
}

TEST_CASE("products above the top degree truncate silently") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(ci, "u");
    RingElement v = RingElement::generator(ci, "v");
    CHECK((u * v) * u == RingElement::zero(ci));
    CHECK(u.pow(7) == RingElement::zero(ci));

    Poly raw;
    raw[Monomial(2).raise(0, 3)] = 5;  // u^3, degree 6
    CHECK(RingElement::from_terms(ci, raw) == RingElement::zero(ci));
}

TEST_CASE("named arithmetic entry points match the operators") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(ci, "u");
    RingElement v = RingElement::generator(ci, "v");
    CHECK(add(u, v) == u + v);
    CHECK(mul(u, v) == u * v);
    CHECK(scale(Rational(-3, 2), u) == Rational(-3, 2) * u);
}

TEST_CASE("operations on mismatched presentations are rejected") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    RingElement a = RingElement::generator(ci, "u");
    RingElement b = RingElement::generator(cii, "u");
    CHECK_THROWS_WITH_AS(a * b, doctest::Contains("presentation mismatch"), ValidationError);
    CHECK_THROWS_AS(a + b, ValidationError);
}

TEST_CASE("symbolic pairing agrees with the hand-expansion oracle") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (const std::string& name : builtin_names()) {
        PresentationPtr p = builtin_presentation(name);
        for (int i = 0; i < 300; ++i) {
            Rational a1 = coeff(rng), b1 = coeff(rng), a2 = coeff(rng), b2 = coeff(rng);
            RingElement x = deg2(p, a1, b1);
            RingElement y = deg2(p, a2, b2);
            CAPTURE(name);
            CHECK(pair_fundamental(x * y) == oracle_pairing(name, a1, b1, a2, b2));
        }
    }
}

TEST_CASE("ring axioms hold for random elements") {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (const std::string& name : builtin_names()) {
        PresentationPtr p = builtin_presentation(name);
        auto random_element = [&] {
            Poly terms;
            for (int d = 0; d <= p->top_degree(); d += 2)
                for (const Monomial& m : p->monomials(d))
                    terms[m] = Rational(num(rng), den(rng));
            return RingElement::from_terms(p, terms);
        };
        for (int i = 0; i < 200; ++i) {
            RingElement a = random_element();
            RingElement b = random_element();
            RingElement c = random_element();
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(reduce(a) == a);
            CHECK(reduce(reduce(a)) == reduce(a));
            CHECK(pair_fundamental(a + b) == pair_fundamental(a) + pair_fundamental(b));
            Rational q(num(rng), den(rng));
            CHECK(pair_fundamental(q * a) == q * pair_fundamental(a));
        }
    }
}

TEST_CASE("mod-2 reduction uses the relations taken mod 2") {
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    Mod2Element u = mod2(RingElement::generator(ci, "u"));
    Mod2Element v = mod2(RingElement::generator(ci, "v"));
    CHECK(u * u == u * v);  // u^2 = u*v mod 2
    CHECK(v * v == Mod2Element::zero(ci));

    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    Mod2Element ub = mod2(RingElement::generator(cii, "u"));
    Mod2Element vb = mod2(RingElement::generator(cii, "v"));
    CHECK(ub * vb == ub * ub);  // u*v = u^2 mod 2
    CHECK(vb * vb == Mod2Element::zero(cii));  // v^2 = 2u^2 = 0 mod 2

    // even coefficients die, self-sum cancels
    RingElement two_u = Rational(2) * RingElement::generator(ci, "u");
    CHECK(mod2(two_u).is_zero());
    CHECK((u + u).is_zero());
    CHECK_THROWS_AS(mod2(Rational(1, 2) * RingElement::generator(ci, "u")), ValidationError);
}
