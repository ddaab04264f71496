#include "pineta/enumerate.hpp"

#include "pineta/error.hpp"
#include "pineta/signature.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

namespace pineta {

namespace {

ModuliRow make_row(const FamilyDescriptor& desc, SignConvention s, DiffeoType expected) {
    if (classify(desc, s) != expected)
        throw std::logic_error("row " + desc.str() + " does not classify as " + expected.str());
    EtaValue closed = eta_closed_form(desc);
    EtaValue fixed = eta_via_fixed_points(desc);
    if (!(closed == fixed))
        throw std::logic_error("eta mismatch for " + desc.str() + ": closed form " +
                               closed.str() + " vs fixed points " + fixed.str());
    return ModuliRow{desc, bordism_class(desc, s), closed};
}

}  // namespace

ModuliTable build_moduli_table(DiffeoType t, std::optional<SignConvention> epsilon, int count,
                               bool allow_negative_r, bool parallel) {
    if (t.kind == DiffeoType::Kind::X && !epsilon)
        throw ValidationError("X types need a sign convention (--eps)");
    SignConvention s = epsilon.value_or(SignConvention::plus());

    ModuliTable table;
    table.type = t;
    table.epsilon = t.kind == DiffeoType::Kind::X ? std::optional(s) : std::nullopt;

    std::vector<FamilyDescriptor> descs = representatives(t, s, count, allow_negative_r);
    table.rows.reserve(descs.size());

    if (parallel && descs.size() > 1) {
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::size_t chunk = (descs.size() + workers - 1) / workers;
        std::vector<std::future<std::vector<ModuliRow>>> parts;
        for (std::size_t begin = 0; begin < descs.size(); begin += chunk) {
            std::size_t end = std::min(begin + chunk, descs.size());
            parts.push_back(std::async(std::launch::async, [&, begin, end] {
                std::vector<ModuliRow> rows;
                rows.reserve(end - begin);
                for (std::size_t i = begin; i < end; ++i)
                    rows.push_back(make_row(descs[i], s, t));
                return rows;
            }));
        }
        for (auto& part : parts)
            for (ModuliRow& row : part.get()) table.rows.push_back(std::move(row));
    } else {
        for (const FamilyDescriptor& desc : descs) table.rows.push_back(make_row(desc, s, t));
    }

    std::set<Rational> magnitudes;
    for (const ModuliRow& row : table.rows) magnitudes.insert(row.eta.magnitude);
    table.distinct_count = magnitudes.size();

    if (!allow_negative_r && table.distinct_count != table.rows.size())
        throw std::logic_error("expected strictly growing eta magnitudes for " + t.str() +
                               ", got " + std::to_string(table.distinct_count) + " distinct of " +
                               std::to_string(table.rows.size()));
    return table;
}

InvariantReport build_invariant_report(const FamilyDescriptor& f,
                                       const std::vector<SignConvention>& epsilons) {
    InvariantReport report{.descriptor = f,
                           .by_epsilon = {},
                           .eta_closed = eta_closed_form(f),
                           .eta_fixed_points = eta_via_fixed_points(f),
                           .chern = std::nullopt,
                           .c_squared = std::nullopt,
                           .base_signature = std::nullopt,
                           .spin = std::nullopt};
    for (SignConvention s : epsilons) {
        report.by_epsilon.push_back({s, bordism_class(f, s), classify(f, s)});
        if (!f.is_circle_bundle()) break;  // epsilon plays no role
    }

    if (f.is_circle_bundle()) {
        report.chern = chern_class(f).str();
        report.c_squared = c_squared_pairing(f);
        report.base_signature = intersection_signature(base_presentation(f.family())).signature;
        report.spin = w2_report(f);
    }
    return report;
}

}  // namespace pineta
