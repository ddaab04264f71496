// pineta CLI: invariants of Z_2 quotients of S^2 x S^3.
//
// Subcommands: invariants, enumerate, classify, ring, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include "pineta/dsl.hpp"
#include "pineta/error.hpp"
#include "pineta/format.hpp"
#include "pineta/signature.hpp"
#include "pineta/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace pineta;

struct DescriptorArgs {
    std::string family;
    std::optional<long long> k, l, d;

    FamilyDescriptor build() const {
        Family fam = parse_family(family);
        if (fam == Family::Brieskorn) {
            if (!d) throw ValidationError("the brieskorn family needs -d");
            return FamilyDescriptor::brieskorn(*d);
        }
        if (!k || !l) throw ValidationError("the " + family + " family needs -k and -l");
        return FamilyDescriptor::circle_bundle(fam, *k, *l);
    }
};

void add_descriptor_flags(CLI::App* cmd, DescriptorArgs& args) {
    cmd->add_option("--family", args.family, "caseI, caseII or brieskorn")->required();
    cmd->add_option("-k", args.k, "odd weight k (circle-bundle families)");
    cmd->add_option("-l", args.l, "even weight l (circle-bundle families)");
    cmd->add_option("-d", args.d, "even degree d (brieskorn family)");
}

std::vector<SignConvention> parse_eps(const std::string& eps) {
    if (eps == "+1" || eps == "1") return {SignConvention::plus()};
    if (eps == "-1") return {SignConvention::minus()};
    if (eps == "both") return {SignConvention::plus(), SignConvention::minus()};
    throw ValidationError("unknown --eps '" + eps + "' (expected +1, -1 or both)");
}

void emit_rows(const std::vector<SchemaRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv)
        std::cout << render_csv(rows);
    else
        std::cout << render_json(rows);
}

int cmd_invariants(const DescriptorArgs& args, const std::string& eps, const std::string& format) {
    FamilyDescriptor desc = args.build();
    OutputFormat fmt = parse_format(format);
    InvariantReport report = build_invariant_report(desc, parse_eps(eps));
    if (fmt == OutputFormat::Table)
        std::cout << render_text(report);
    else
        emit_rows(schema_rows(report), fmt);
    return 0;
}

int cmd_classify(const DescriptorArgs& args, const std::string& eps, const std::string& format) {
    FamilyDescriptor desc = args.build();
    OutputFormat fmt = parse_format(format);
    std::vector<SchemaRow> rows;
    for (SignConvention s : parse_eps(eps)) {
        DiffeoType t = classify(desc, s);
        if (fmt == OutputFormat::Table) {
            std::cout << desc.str();
            if (desc.is_circle_bundle()) std::cout << "  eps=" << s.str();
            std::cout << "  ->  " << t.str() << "\n";
        } else {
            rows.push_back(make_schema_row(desc,
                                           desc.is_circle_bundle() ? std::optional(s)
                                                                   : std::nullopt,
                                           bordism_class(desc, s), eta_closed_form(desc), t));
        }
        if (!desc.is_circle_bundle()) break;  // epsilon plays no role
    }
    if (fmt != OutputFormat::Table) emit_rows(rows, fmt);
    return 0;
}

int cmd_enumerate(const std::string& type_token, const std::string& eps, int count,
                  const std::string& format, bool allow_negative_r, bool parallel) {
    DiffeoType type = DiffeoType::parse(type_token);
    OutputFormat fmt = parse_format(format);

    std::vector<ModuliTable> tables;
    if (type.kind == DiffeoType::Kind::Q) {
        tables.push_back(build_moduli_table(type, std::nullopt, count, allow_negative_r, parallel));
    } else {
        for (SignConvention s : parse_eps(eps))
            tables.push_back(build_moduli_table(type, s, count, allow_negative_r, parallel));
    }

    if (fmt == OutputFormat::Table) {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << render_text(tables[i]);
        }
    } else {
        std::vector<SchemaRow> rows;
        for (const ModuliTable& t : tables)
            for (SchemaRow& row : schema_rows(t)) rows.push_back(std::move(row));
        emit_rows(rows, fmt);
    }
    return 0;
}

int cmd_ring(const std::string& builtin, const std::string& presentation_path,
             const std::string& eval) {
    PresentationPtr pres;
    if (!builtin.empty() && !presentation_path.empty())
        throw ValidationError("--builtin and --presentation are mutually exclusive");
    if (!builtin.empty()) {
        pres = builtin_presentation(builtin);
    } else if (!presentation_path.empty()) {
        std::ifstream in(presentation_path);
        if (!in) throw ValidationError("cannot open '" + presentation_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        pres = parse_presentation(buffer.str(), presentation_path);
    } else {
        throw ValidationError("ring needs --builtin <name> or --presentation <path>");
    }

    std::cout << "presentation: " << (pres->name().empty() ? "<anonymous>" : pres->name()) << "\n";
    if (eval.empty()) {
        std::cout << "generators:  ";
        for (std::size_t i = 0; i < pres->generators().size(); ++i)
            std::cout << (i ? ", " : "") << pres->generators()[i].name << ":"
                      << pres->generators()[i].degree;
        std::cout << "\n";
        std::cout << "basis ranks: ";
        for (int d = 0; d <= pres->top_degree(); d += 2)
            std::cout << (d ? ", " : "") << "deg " << d << ": " << pres->basis(d).size();
        std::cout << "\n";
        SignatureResult sig = intersection_signature(pres);
        std::cout << "signature:   " << sig.signature << (sig.degenerate ? " (degenerate)" : "")
                  << "\n";
        return 0;
    }
    RingElement value = parse_element(pres, eval);
    std::cout << "normal form: " << value.str() << "\n";
    std::cout << "pairing:     " << to_string(pair_fundamental(value)) << "\n";
    return 0;
}

int cmd_verify(bool parallel) {
    std::vector<SuiteResult> results = run_verification(parallel);
    for (const SuiteResult& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n";
        if (!r.passed) std::cout << "      " << r.detail << "\n";
    }
    std::size_t passed = 0;
    for (const SuiteResult& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " suites passed\n";
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Z_2 quotients of S^2 x S^3"};
    app.require_subcommand(1);

    DescriptorArgs inv_args;
    std::string inv_eps = "both", inv_format = "table";
    CLI::App* inv = app.add_subcommand("invariants", "all invariants of one family member");
    add_descriptor_flags(inv, inv_args);
    inv->add_option("--eps", inv_eps, "+1, -1 or both (default both)");
    inv->add_option("--format", inv_format, "table, csv or json");

    DescriptorArgs cls_args;
    std::string cls_eps = "both", cls_format = "table";
    CLI::App* cls = app.add_subcommand("classify", "diffeomorphism type of one family member");
    add_descriptor_flags(cls, cls_args);
    cls->add_option("--eps", cls_eps, "+1, -1 or both (default both)");
    cls->add_option("--format", cls_format, "table, csv or json");

    std::string enum_type, enum_eps = "both", enum_format = "table";
    int enum_count = 0;
    bool enum_negative = false, enum_parallel = false;
    CLI::App* enu = app.add_subcommand("enumerate", "representatives of one diffeomorphism type");
    enu->add_option("--type", enum_type, "X0, X2, X4, X6, X8, Q0, Q2, Q4, Q6 or Q8")->required();
    enu->add_option("--count", enum_count, "number of representatives")->required();
    enu->add_option("--eps", enum_eps, "+1, -1 or both (default both; ignored for Q types)");
    enu->add_option("--format", enum_format, "table, csv or json");
    enu->add_flag("--allow-negative-r", enum_negative, "alternate the family parameter over Z");
    enu->add_flag("--parallel", enum_parallel, "compute rows in parallel");

    std::string ring_builtin, ring_path, ring_eval;
    CLI::App* ring = app.add_subcommand("ring", "inspect a presentation, evaluate expressions");
    ring->add_option("--builtin", ring_builtin, "caseI or caseII");
    ring->add_option("--presentation", ring_path, "path to a presentation file");
    ring->add_option("--eval", ring_eval, "expression in the generators");

    bool verify_parallel = false;
    CLI::App* ver = app.add_subcommand("verify", "run all cross-check suites");
    ver->add_flag("--parallel", verify_parallel, "run suites in parallel");

    try {
        app.parse(argc, argv);
        if (inv->parsed()) return cmd_invariants(inv_args, inv_eps, inv_format);
        if (cls->parsed()) return cmd_classify(cls_args, cls_eps, cls_format);
        if (enu->parsed())
            return cmd_enumerate(enum_type, enum_eps, enum_count, enum_format, enum_negative,
                                 enum_parallel);
        if (ring->parsed()) return cmd_ring(ring_builtin, ring_path, ring_eval);
        if (ver->parsed()) return cmd_verify(verify_parallel);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const pineta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
