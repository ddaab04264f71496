#pragma once

#include "pineta/rational.hpp"

#include <string>

namespace pineta {

/// The three families of nonnegatively curved 5-manifolds.
///   CaseI     X_{k,l}:  circle-bundle quotients over CP^2 # -CP^2
///   CaseII    Xbar_{k,l}: circle-bundle quotients over CP^2 # CP^2
///   Brieskorn Q^5_0(d): involution quotients of Brieskorn spheres
enum class Family { CaseI, CaseII, Brieskorn };

std::string family_token(Family f);   // "caseI" / "caseII" / "brieskorn"
Family parse_family(const std::string& token);

/// Validated family parameters.  The standing hypotheses are enforced at
/// construction: k odd, l even, gcd(k,l) = 1 for the circle-bundle families;
/// d even and nonnegative for the Brieskorn family.
class FamilyDescriptor {
public:
    static FamilyDescriptor case_i(long long k, long long l);
    static FamilyDescriptor case_ii(long long k, long long l);
    static FamilyDescriptor circle_bundle(Family f, long long k, long long l);
    static FamilyDescriptor brieskorn(long long d);

    Family family() const { return family_; }
    bool is_circle_bundle() const { return family_ != Family::Brieskorn; }

    long long k() const;  // circle-bundle families only
    long long l() const;
    long long d() const;  // Brieskorn only

    std::string str() const;  // "X_{1,2}", "Xbar_{-3,4}", "Q(24)"

    bool operator==(const FamilyDescriptor&) const = default;

private:
    FamilyDescriptor(Family f, long long k, long long l, long long d)
        : family_(f), k_(k), l_(l), d_(d) {}

    Family family_;
    long long k_, l_, d_;
};

/// The unknown sign epsilon in the characteristic-submanifold formula.
class SignConvention {
public:
    explicit SignConvention(int epsilon);
    static SignConvention plus() { return SignConvention(+1); }
    static SignConvention minus() { return SignConvention(-1); }

    int epsilon() const { return epsilon_; }
    Rational half() const { return Rational(epsilon_, 2); }
    std::string str() const { return epsilon_ > 0 ? "+1" : "-1"; }

    bool operator==(const SignConvention&) const = default;

private:
    int epsilon_;
};

/// An element of the Pin+ bordism group in dimension 4, Z_16, taken modulo
/// the sign involution and canonicalized into {0,...,8}.
class BordismClass {
public:
    static BordismClass from_integer(const Integer& x);
    /// As above, after checking the rational is an integer.
    static BordismClass from_rational(const Rational& q);

    int canonical() const { return canonical_; }

    bool operator==(const BordismClass&) const = default;

private:
    explicit BordismClass(int canonical) : canonical_(canonical) {}
    int canonical_;
};

}  // namespace pineta
