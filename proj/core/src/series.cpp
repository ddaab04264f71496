#include "pineta/series.hpp"

#include "pineta/error.hpp"

namespace pineta {

namespace {

void require_top_degree_4(const RingElement& e) {
    if (!e.presentation())
        throw ValidationError("series argument has no presentation attached");
    if (e.presentation()->top_degree() > 4)
        throw ValidationError("series are truncated at degree 4; top_degree " +
                              std::to_string(e.presentation()->top_degree()) +
                              " is unsupported");
}

}  // namespace

RingElement ahat_series(const RingElement& p1) {
    require_top_degree_4(p1);
    if (!p1.is_homogeneous_of_degree(4))
        throw ValidationError("p1 must be homogeneous of degree 4 (or zero)");
    RingElement one = RingElement::constant(p1.presentation(), 1);
    return one - Rational(1, 24) * p1;
}

RingElement inv_cosh_half(const RingElement& c) {
    require_top_degree_4(c);
    if (!c.is_homogeneous_of_degree(2))
        throw ValidationError("c must be homogeneous of degree 2 (or zero)");
    RingElement one = RingElement::constant(c.presentation(), 1);
    return one - Rational(1, 8) * (c * c);
}

RingElement exp_half(const RingElement& c) {
    require_top_degree_4(c);
    if (!c.is_homogeneous_of_degree(2))
        throw ValidationError("c must be homogeneous of degree 2 (or zero)");
    RingElement one = RingElement::constant(c.presentation(), 1);
    return one + Rational(1, 2) * c + Rational(1, 8) * (c * c);
}

SignAmbiguousRational local_contribution_codim2(const RingElement& canonical_c,
                                                const RingElement& fiber_c,
                                                const RingElement& p1) {
    if (canonical_c.presentation().get() != fiber_c.presentation().get() ||
        fiber_c.presentation().get() != p1.presentation().get())
        throw ValidationError("presentation mismatch in local contribution");
    RingElement integrand = exp_half(canonical_c) * inv_cosh_half(fiber_c) * ahat_series(p1);
    Rational value = pair_fundamental(integrand) / 2;
    return SignAmbiguousRational::unknown(value);
}

Rational isolated_fixed_point_contribution() { return Rational(1, 8); }

}  // namespace pineta
