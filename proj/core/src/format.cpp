#include "pineta/format.hpp"

#include "pineta/error.hpp"

#include <json.hpp>

#include <array>
#include <sstream>

namespace pineta {

OutputFormat parse_format(const std::string& token) {
    if (token == "table") return OutputFormat::Table;
    if (token == "csv") return OutputFormat::Csv;
    if (token == "json") return OutputFormat::Json;
    throw ValidationError("unknown format '" + token + "' (expected table, csv or json)");
}

SchemaRow make_schema_row(const FamilyDescriptor& desc, std::optional<SignConvention> epsilon,
                          const BordismClass& bordism, const EtaValue& eta, DiffeoType type) {
    SchemaRow row{.family = family_token(desc.family()),
                  .k = std::nullopt,
                  .l = std::nullopt,
                  .d = std::nullopt,
                  .epsilon = std::nullopt,
                  .bordism = bordism.canonical(),
                  .eta = eta,
                  .type = type};
    if (desc.is_circle_bundle()) {
        row.k = desc.k();
        row.l = desc.l();
        if (epsilon) row.epsilon = epsilon->epsilon();
    } else {
        row.d = desc.d();
    }
    return row;
}

std::vector<SchemaRow> schema_rows(const ModuliTable& table) {
    std::vector<SchemaRow> rows;
    rows.reserve(table.rows.size());
    for (const ModuliRow& r : table.rows)
        rows.push_back(make_schema_row(r.descriptor, table.epsilon, r.bordism, r.eta, table.type));
    return rows;
}

std::vector<SchemaRow> schema_rows(const InvariantReport& report) {
    std::vector<SchemaRow> rows;
    if (report.descriptor.is_circle_bundle()) {
        for (const auto& pe : report.by_epsilon)
            rows.push_back(make_schema_row(report.descriptor, pe.epsilon, pe.bordism,
                                           report.eta_closed, pe.type));
    } else if (!report.by_epsilon.empty()) {
        const auto& pe = report.by_epsilon.front();
        rows.push_back(make_schema_row(report.descriptor, std::nullopt, pe.bordism,
                                       report.eta_closed, pe.type));
    }
    return rows;
}

namespace {

// eta as a signed numerator when the sign is known, else as a magnitude
Integer eta_numerator(const EtaValue& eta) {
    return eta.sign_known ? numerator(eta.signed_value()) : numerator(eta.magnitude);
}

std::string opt_str(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

std::string render_csv(std::span<const SchemaRow> rows) {
    std::string out = "family,k,l,d,epsilon,bordism,eta_num,eta_den,eta_sign_known,diffeo_type\n";
    for (const SchemaRow& r : rows) {
        out += r.family + ',' + opt_str(r.k) + ',' + opt_str(r.l) + ',' + opt_str(r.d) + ',';
        if (r.epsilon) out += (*r.epsilon > 0 ? "+1" : "-1");
        out += ',' + std::to_string(r.bordism) + ',';
        out += eta_numerator(r.eta).str() + ',' + denominator(r.eta.magnitude).str() + ',';
        out += (r.eta.sign_known ? "true" : "false");
        out += ',' + r.type.token() + '\n';
    }
    return out;
}

std::string render_json(std::span<const SchemaRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SchemaRow& r : rows) {
        nlohmann::ordered_json o;
        o["family"] = r.family;
        o["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
        o["l"] = r.l ? nlohmann::ordered_json(*r.l) : nlohmann::ordered_json(nullptr);
        o["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json(nullptr);
        o["epsilon"] = r.epsilon ? nlohmann::ordered_json(*r.epsilon) : nlohmann::ordered_json(nullptr);
        o["bordism"] = r.bordism;
        o["eta_num"] = eta_numerator(r.eta).str();
        o["eta_den"] = denominator(r.eta.magnitude).str();
        o["eta_sign_known"] = r.eta.sign_known;
        o["diffeo_type"] = r.type.token();
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

namespace {

// column width in characters, not bytes (eta strings may carry "±")
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xc0) != 0x80) ++w;
    return w;
}

std::string pad(std::string s, std::size_t width) {
    for (std::size_t w = display_width(s); w < width; ++w) s += ' ';
    return s;
}

}  // namespace

std::string render_text(const ModuliTable& table) {
    std::ostringstream out;
    out << "# type " << table.type.str();
    if (table.epsilon) out << ", eps = " << table.epsilon->str();
    out << ", rows = " << table.rows.size() << ", distinct eta magnitudes = "
        << table.distinct_count << "\n";

    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"descriptor", "bordism", "eta", "type"});
    for (const ModuliRow& r : table.rows)
        cells.push_back({r.descriptor.str(), std::to_string(r.bordism.canonical()), r.eta.str(),
                         table.type.str()});
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], display_width(row[c]));
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 4; ++c) out << pad(row[c], width[c] + (c + 1 < 4 ? 2 : 0));
        out << "\n";
    }
    return out.str();
}

std::string render_text(const InvariantReport& report) {
    std::ostringstream out;
    out << "descriptor:         " << report.descriptor.str() << "\n";
    out << "family:             " << family_token(report.descriptor.family()) << "\n";
    if (report.chern) out << "chern class c:      " << *report.chern << "\n";
    if (report.c_squared) out << "<c^2, [B]>:         " << report.c_squared->str() << "\n";
    if (report.base_signature) out << "signature(B):       " << *report.base_signature << "\n";
    if (report.spin) {
        out << "w2(B) nonzero:      " << (report.spin->base_w2_nonzero ? "yes" : "no") << "\n";
        out << "N_{k,l} spin:       " << (report.spin->n_spin ? "yes" : "no") << "\n";
        out << "X_{k,l} spin:       " << (report.spin->x_spin ? "yes" : "no") << "\n";
    }
    out << "eta (closed form):  " << report.eta_closed.str() << "\n";
    out << "eta (fixed points): " << report.eta_fixed_points.str() << "\n";
    for (const auto& pe : report.by_epsilon) {
        if (report.descriptor.is_circle_bundle())
            out << "eps = " << pe.epsilon.str() << ":           ";
        out << "bordism class [P] = " << pe.bordism.canonical() << ", diffeo type "
            << pe.type.str() << "\n";
    }
    return out.str();
}

}  // namespace pineta
