#pragma once

#include "pineta/element.hpp"
#include "pineta/family.hpp"
#include "pineta/series.hpp"

namespace pineta {

/// A relative eta invariant: exact rational with a sign-ambiguity flag.
using EtaValue = SignAmbiguousRational;

/// Cohomology presentation of the base 4-manifold of a circle-bundle family.
/// Throws for the Brieskorn family, which has no base in scope.
PresentationPtr base_presentation(Family f);

/// First Chern class of the principal circle bundle N_{k,l} -> B:
/// c_{k,l} = -l*u + k*v.
RingElement chern_class(const FamilyDescriptor& f);

/// <c_{k,l}^2, [B]>, evaluated symbolically (never from a closed form).
Integer c_squared_pairing(const FamilyDescriptor& f);

/// Pin+ bordism class of a characteristic submanifold, in Z_16/±.
/// Circle-bundle families: (1 + eps/2) <c^2,[B]> - (eps/2) sign(B), with the
/// signature computed from the presentation.  Brieskorn: d mod 16.
BordismClass bordism_class(const FamilyDescriptor& f, SignConvention s);

/// Relative eta invariant by closed form.  Sign is unknown for the
/// circle-bundle families; the Brieskorn value -d/4 has a known sign.
EtaValue eta_closed_form(const FamilyDescriptor& f);

/// Relative eta invariant through the fixed-point formula: -2 times the sum
/// of local contributions of the involution's fixed components.
EtaValue eta_via_fixed_points(const FamilyDescriptor& f);

struct SpinReport {
    bool base_w2_nonzero;
    bool n_spin;  // total space N_{k,l} of the bundle with c1 = c_{k,l}
    bool x_spin;  // quotient X_{k,l}, a bundle with c1 = 2*c_{k,l}
};

/// Spin data for a circle-bundle family, decided through the mod-2 Gysin
/// kernel criterion.
SpinReport w2_report(const FamilyDescriptor& f);

}  // namespace pineta
