#pragma once

#include "pineta/presentation.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pineta {

/// An element of a presented ring: an exact-rational combination of
/// reduced (normal-form) monomials of degree <= top_degree.  Every
/// constructor and operation reduces; products above the top degree are
/// silently truncated, modelling integration over the underlying 4-manifold.
/// Immutable value type.
class RingElement {
public:
    RingElement() = default;  // detached zero; usable only as a placeholder

    static RingElement zero(PresentationPtr p);
    static RingElement constant(PresentationPtr p, Rational value);
    static RingElement generator(PresentationPtr p, std::string_view name);
    static RingElement monomial(PresentationPtr p, const Monomial& m, Rational coeff = 1);
    /// Build from arbitrary (possibly unreduced) terms; reduces and truncates.
    static RingElement from_terms(PresentationPtr p, const Poly& raw);

    const PresentationPtr& presentation() const { return pres_; }
    const Poly& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest degree with a nonzero term; -1 for zero.
    int degree() const;
    /// True if all terms share one degree; zero is homogeneous of any degree.
    bool is_homogeneous() const;
    bool is_homogeneous_of_degree(int d) const;
    RingElement degree_component(int d) const;

    /// Coefficient of a (normal-form) monomial, 0 if absent.
    Rational coefficient(const Monomial& m) const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);
    RingElement& operator*=(const Rational& scale);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
    friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }

    RingElement pow(unsigned exponent) const;

    bool operator==(const RingElement& rhs) const;

    std::string str() const;

private:
    RingElement(PresentationPtr p, Poly reduced) : pres_(std::move(p)), terms_(std::move(reduced)) {}
    static void require_same_presentation(const RingElement& a, const RingElement& b);

    PresentationPtr pres_;
    Poly terms_;
};

/// Re-runs reduction; the identity on well-formed elements (idempotence).
RingElement reduce(const RingElement& e);

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement scale(const Rational& q, const RingElement& a);

/// Pairing with the fundamental class: the coefficient of the orientation
/// class in the top-degree component.  Components of lower degree pair to 0.
Rational pair_fundamental(const RingElement& e);

/// Z_2 coefficients: a set of mod-2 normal-form monomials.  Reduction uses
/// the presentation's relations taken mod 2.
class Mod2Element {
public:
    Mod2Element() = default;

    static Mod2Element zero(PresentationPtr p);
    static Mod2Element from_monomials(PresentationPtr p, const Poly2& raw);

    const PresentationPtr& presentation() const { return pres_; }
    const Poly2& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous_of_degree(int d) const;

    Mod2Element& operator+=(const Mod2Element& rhs);
    Mod2Element& operator*=(const Mod2Element& rhs);
    friend Mod2Element operator+(Mod2Element a, const Mod2Element& b) { return a += b; }
    friend Mod2Element operator*(Mod2Element a, const Mod2Element& b) { return a *= b; }

    bool operator==(const Mod2Element& rhs) const;

    std::string str() const;

private:
    Mod2Element(PresentationPtr p, Poly2 reduced) : pres_(std::move(p)), terms_(std::move(reduced)) {}

    PresentationPtr pres_;
    Poly2 terms_;
};

/// Mod-2 reduction of an integral element; rejects fractional coefficients.
Mod2Element mod2(const RingElement& e);

}  // namespace pineta
