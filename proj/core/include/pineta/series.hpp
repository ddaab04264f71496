#pragma once

#include "pineta/element.hpp"
#include "pineta/rational.hpp"

#include <string>

namespace pineta {

/// An exact rational whose overall sign may be undetermined (the invariants
/// of the circle-bundle families are defined only up to a global sign).
/// Values with an unknown sign compare equal iff their magnitudes agree.
struct SignAmbiguousRational {
    Rational magnitude;      // >= 0
    bool sign_known = false;
    int sign = +1;           // meaningful only when sign_known

    static SignAmbiguousRational unknown(const Rational& value) {
        return {abs(value), false, +1};
    }
    static SignAmbiguousRational known(const Rational& value) {
        if (value == 0) return {0, true, +1};
        return {abs(value), true, value > 0 ? +1 : -1};
    }

    /// Signed value; only meaningful when sign_known.
    Rational signed_value() const { return sign < 0 ? Rational(-magnitude) : magnitude; }

    bool operator==(const SignAmbiguousRational& o) const {
        if (magnitude != o.magnitude) return false;
        if (!sign_known || !o.sign_known) return true;
        return magnitude == 0 || sign == o.sign;
    }

    std::string str() const {
        if (magnitude == 0) return "0";
        if (sign_known) return to_string(signed_value());
        return "±" + to_string(magnitude);
    }
};

// Characteristic-class series, hard-truncated to degree 4 (the dimension of
// the base).  All inputs must live in a presentation with top_degree <= 4.

/// A-hat genus through degree 4: 1 - p1/24.
RingElement ahat_series(const RingElement& p1);

/// 1/cosh(c/2) through degree 4: 1 - c^2/8.
RingElement inv_cosh_half(const RingElement& c);

/// e^{c/2} through degree 4: 1 + c/2 + c^2/8.
RingElement exp_half(const RingElement& c);

/// Local contribution of a codimension-2 fixed-point component of the
/// involution: the fixed-point integrand e^{c/2} * (1/cosh(c_fiber/2)) *
/// A-hat(B) paired with the fundamental class, times the prefactor 1/2 that
/// the two imaginary factors combine into.  The overall sign is unknown.
SignAmbiguousRational local_contribution_codim2(const RingElement& canonical_c,
                                                const RingElement& fiber_c,
                                                const RingElement& p1);

/// Local contribution of one isolated fixed point of the Brieskorn
/// involution (imported as a constant).
Rational isolated_fixed_point_contribution();

}  // namespace pineta
