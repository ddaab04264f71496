#pragma once

#include "pineta/element.hpp"
#include "pineta/presentation.hpp"

#include <vector>

namespace pineta {

struct SignatureResult {
    int signature = 0;      // of the nondegenerate part
    bool degenerate = false;
    int rank = 0;           // rank of the pairing matrix
    Rational determinant;   // of the full pairing matrix

    operator int() const { return signature; }
};

/// The symmetric pairing M[i][j] = <g_i * g_j, [B]> over the degree-2
/// reduced basis.
std::vector<std::vector<Rational>> intersection_matrix(const PresentationPtr& p);

/// Signature of the intersection form, computed exactly by congruence
/// diagonalization with symmetric pivoting (a zero diagonal is repaired by a
/// basis change before splitting off the pivot).  A singular form is flagged
/// and the signature of its nondegenerate part returned.
SignatureResult intersection_signature(const PresentationPtr& p);

}  // namespace pineta
