#pragma once

#include "pineta/enumerate.hpp"

#include <span>
#include <string>
#include <vector>

namespace pineta {

enum class OutputFormat { Table, Csv, Json };
OutputFormat parse_format(const std::string& token);

/// One flat record of the machine-readable schema.  Rationals are emitted as
/// numerator/denominator pairs; fields that do not apply stay empty.
/// Columns: family,k,l,d,epsilon,bordism,eta_num,eta_den,eta_sign_known,diffeo_type
struct SchemaRow {
    std::string family;
    std::optional<long long> k, l, d;
    std::optional<int> epsilon;
    int bordism;
    EtaValue eta;
    DiffeoType type;
};

SchemaRow make_schema_row(const FamilyDescriptor& desc, std::optional<SignConvention> epsilon,
                          const BordismClass& bordism, const EtaValue& eta, DiffeoType type);

std::vector<SchemaRow> schema_rows(const ModuliTable& table);
std::vector<SchemaRow> schema_rows(const InvariantReport& report);

std::string render_csv(std::span<const SchemaRow> rows);
std::string render_json(std::span<const SchemaRow> rows);

std::string render_text(const ModuliTable& table);
std::string render_text(const InvariantReport& report);

}  // namespace pineta
