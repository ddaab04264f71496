#pragma once

#include "pineta/family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pineta {

/// Diffeomorphism type of an orientable non-spin 5-manifold with fundamental
/// group Z_2 and universal cover S^2 x S^3.  Kind X: the fundamental group
/// acts trivially on pi_2; kind Q: non-trivially.  The index is the bordism
/// class of a characteristic submanifold, always even here.
struct DiffeoType {
    enum class Kind { X, Q };

    Kind kind;
    int index;  // in {0, 2, 4, 6, 8}

    static DiffeoType make(Kind kind, int index);
    static DiffeoType parse(std::string_view token);  // "X0" ... "Q8"

    std::string str() const;    // "X(4)"
    std::string token() const;  // "X4"

    bool operator==(const DiffeoType&) const = default;
};

/// Sort a family member into its diffeomorphism type.
DiffeoType classify(const FamilyDescriptor& f, SignConvention s);

/// The first `count` members of the parametric family realizing a type:
///   X(0) = X_{8r-1,2}   X(4) = X_{8r+1,2}   X(8) = X_{8r+3,2}
///   X(2) = Xbar_{8r+2e+3,4}   X(6) = Xbar_{8r+2e-1,4}
///   Q(q) = Q(q + 16m)
/// with r, m = 0, 1, 2, ...; when negative r is allowed the sequence is
/// 0, 1, -1, 2, -2, ....  Every returned descriptor is re-classified and
/// checked against the requested type.
std::vector<FamilyDescriptor> representatives(DiffeoType t, SignConvention s, int count,
                                              bool allow_negative_r = false);

}  // namespace pineta
