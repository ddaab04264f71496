#pragma once

#include "pineta/element.hpp"
#include "pineta/presentation.hpp"

namespace pineta {

/// First Pontryagin class of the presented 4-manifold, pinned down by the
/// signature theorem: p1 = 3 * sign(B) * (orientation class).
RingElement pontryagin_class(const PresentationPtr& p);

/// Second Stiefel-Whitney class, computed as the characteristic element of
/// the intersection form: the unique degree-2 class w with
/// <w * x, [B]> = <x * x, [B]> mod 2 for every x.  Throws ValidationError if
/// the mod-2 form does not determine it uniquely or the form is not integral.
Mod2Element stiefel_whitney_class(const PresentationPtr& p);

/// Is the total space of the principal circle bundle with first Chern class
/// c1 spin?  True iff w2 of the base dies in the quotient by c1 mod 2, i.e.
/// lies in the Z_2-span of c1 (the kernel of the mod-2 Gysin map).
bool is_total_space_spin(const Mod2Element& w2_base, const RingElement& c1);

}  // namespace pineta
