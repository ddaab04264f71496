#pragma once

#include "pineta/classification.hpp"
#include "pineta/invariants.hpp"

#include <optional>
#include <vector>

namespace pineta {

struct ModuliRow {
    FamilyDescriptor descriptor;
    BordismClass bordism;
    EtaValue eta;
};

/// A finite slice of a moduli-space family: representatives of one
/// diffeomorphism type with their bordism classes and eta invariants.
/// distinct_count counts distinct eta magnitudes among the rows.
struct ModuliTable {
    DiffeoType type;
    std::optional<SignConvention> epsilon;  // empty for the Brieskorn family
    std::vector<ModuliRow> rows;
    std::size_t distinct_count = 0;
};

/// Build the table for one type.  X types need epsilon; Q types ignore it.
/// Every row is re-validated through classify, and eta is computed by both
/// the closed form and the fixed-point formula, which must agree.  With the
/// default nonnegative parameter sequence, the eta magnitudes of every
/// family grow strictly, so distinct_count == rows.size() is asserted; the
/// alternating sequence of allow_negative_r can repeat a magnitude and is
/// exempt.
ModuliTable build_moduli_table(DiffeoType t, std::optional<SignConvention> epsilon, int count,
                               bool allow_negative_r = false, bool parallel = false);

/// Everything the library can say about one family member.
struct InvariantReport {
    FamilyDescriptor descriptor;

    struct PerEpsilon {
        SignConvention epsilon;
        BordismClass bordism;
        DiffeoType type;
    };
    std::vector<PerEpsilon> by_epsilon;

    EtaValue eta_closed;
    EtaValue eta_fixed_points;

    // circle-bundle families only
    std::optional<std::string> chern;
    std::optional<Integer> c_squared;
    std::optional<int> base_signature;
    std::optional<SpinReport> spin;
};

InvariantReport build_invariant_report(const FamilyDescriptor& f,
                                       const std::vector<SignConvention>& epsilons);

}  // namespace pineta
