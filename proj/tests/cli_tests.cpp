// End-to-end tests of the command-line tool: exit codes, output shapes,
// byte-determinism of the machine-readable formats.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PINETA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariants: table output and validation exit codes") {
    RunResult r = run_cli("invariants --family caseI -k 1 -l 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "<c^2, [B]>:         -8"));
    CHECK(contains(r.output, "bordism class [P] = 4"));
    CHECK(contains(r.output, "eta (closed form):  ±1"));
    CHECK(contains(r.output, "eta (fixed points): ±1"));
    CHECK(contains(r.output, "X(4)"));

    RunResult brieskorn = run_cli("invariants --family brieskorn -d 4");
    CHECK(brieskorn.exit_code == 0);
    CHECK(contains(brieskorn.output, "eta (closed form):  -1"));
    CHECK(contains(brieskorn.output, "bordism class [P] = 4"));

    RunResult bad = run_cli("invariants --family caseI -k 2 -l 2");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "odd"));

    RunResult bad_l = run_cli("invariants --family caseI -k 1 -l 3");
    CHECK(bad_l.exit_code == 2);
    CHECK(contains(bad_l.output, "even"));

    RunResult missing = run_cli("invariants --family brieskorn");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("enumerate: tables, formats, determinism") {
    RunResult x4 = run_cli("enumerate --type X4 --eps +1 --count 3");
    CHECK(x4.exit_code == 0);
    CHECK(contains(x4.output, "X_{1,2}"));
    CHECK(contains(x4.output, "±1"));
    CHECK(contains(x4.output, "±5"));
    CHECK(contains(x4.output, "±9"));
    CHECK(contains(x4.output, "distinct eta magnitudes = 3"));

    RunResult q0 = run_cli("enumerate --type Q0 --count 3");
    CHECK(q0.exit_code == 0);
    CHECK(contains(q0.output, "-4"));
    CHECK(contains(q0.output, "-8"));

    RunResult x4_100 = run_cli("enumerate --type X4 --eps +1 --count 100");
    CHECK(x4_100.exit_code == 0);
    CHECK(contains(x4_100.output, "distinct eta magnitudes = 100"));

    RunResult csv1 = run_cli("enumerate --type X2 --eps both --count 5 --format csv");
    RunResult csv2 = run_cli("enumerate --type X2 --eps both --count 5 --format csv");
    CHECK(csv1.exit_code == 0);
    CHECK(csv1.output == csv2.output);
    CHECK(contains(csv1.output,
                   "family,k,l,d,epsilon,bordism,eta_num,eta_den,eta_sign_known,diffeo_type"));

    RunResult unknown = run_cli("enumerate --type X5 --count 3");
    CHECK(unknown.exit_code == 2);

    RunResult parallel = run_cli("enumerate --type X2 --eps both --count 5 --format csv --parallel");
    CHECK(parallel.output == csv1.output);

    RunResult negative = run_cli("enumerate --type X0 --eps +1 --count 5 --allow-negative-r");
    CHECK(negative.exit_code == 0);
    CHECK(contains(negative.output, "X_{-9,2}"));
    CHECK(contains(negative.output, "distinct eta magnitudes = 3"));
}

TEST_CASE("enumerate: json parses and mirrors the schema") {
    RunResult r = run_cli("enumerate --type Q4 --count 2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["family"] == "brieskorn");
    CHECK(doc[0]["d"] == 4);
    CHECK(doc[0]["k"].is_null());
    CHECK(doc[0]["eta_num"] == "-1");
    CHECK(doc[0]["eta_den"] == "1");
    CHECK(doc[0]["eta_sign_known"] == true);
    CHECK(doc[0]["diffeo_type"] == "Q4");
    CHECK(doc[1]["d"] == 20);
}

TEST_CASE("classify") {
    RunResult r = run_cli("classify --family caseI -k 3 -l 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "X(8)"));
    CHECK(contains(r.output, "eps=+1"));
    CHECK(contains(r.output, "eps=-1"));

    RunResult q = run_cli("classify --family brieskorn -d 2");
    CHECK(q.exit_code == 0);
    CHECK(contains(q.output, "Q(2)"));
}

TEST_CASE("ring: builtins, evaluation, parse errors") {
    RunResult square = run_cli("ring --builtin caseI --eval \"(-2*u+v)^2\"");
    CHECK(square.exit_code == 0);
    CHECK(contains(square.output, "normal form: -8*u*v"));
    CHECK(contains(square.output, "pairing:     -8"));

    RunResult uv = run_cli("ring --builtin caseII --eval \"u*v\"");
    CHECK(uv.exit_code == 0);
    CHECK(contains(uv.output, "normal form: -u^2"));
    CHECK(contains(uv.output, "pairing:     -1"));

    RunResult one = run_cli("ring --builtin caseI --eval \"1\"");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "normal form: 1"));
    CHECK(contains(one.output, "pairing:     0"));

    RunResult summary = run_cli("ring --builtin caseI");
    CHECK(summary.exit_code == 0);
    CHECK(contains(summary.output, "deg 0: 1, deg 2: 2, deg 4: 1"));
    CHECK(contains(summary.output, "signature:   0"));

    RunResult syntax = run_cli("ring --builtin caseI --eval \"u +\"");
    CHECK(syntax.exit_code == 2);
    CHECK(contains(syntax.output, "1:"));  // position-reported

    RunResult unknown_builtin = run_cli("ring --builtin caseX --eval u");
    CHECK(unknown_builtin.exit_code == 2);
}

TEST_CASE("ring: presentation files") {
    std::string path = std::string(PINETA_TEST_DATA_DIR) + "/klein_like.ring";
    RunResult r = run_cli("ring --presentation " + path + " --eval \"(u+v)^2\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pairing:"));

    RunResult missing = run_cli("ring --presentation /nonexistent.ring --eval u");
    CHECK(missing.exit_code == 2);

    std::string bad_path = std::string(PINETA_TEST_DATA_DIR) + "/nonconfluent.ring";
    RunResult bad = run_cli("ring --presentation " + bad_path);
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "non-confluent"));
}

TEST_CASE("verify runs every suite and exits zero") {
    RunResult r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS  ring presentations"));
    CHECK(contains(r.output, "PASS  intersection signatures"));
    CHECK(contains(r.output, "PASS  pairing closed forms"));
    CHECK(contains(r.output, "PASS  eta closed-form vs fixed-point"));
    CHECK(contains(r.output, "PASS  classification round-trip"));
    CHECK(contains(r.output, "PASS  moduli distinctness"));
    CHECK(contains(r.output, "PASS  spin checks"));
    CHECK(contains(r.output, "PASS  ring axioms and properties"));
    CHECK(contains(r.output, "8/8 suites passed"));
    CHECK_FALSE(contains(r.output, "FAIL"));

    RunResult parallel = run_cli("verify --parallel");
    CHECK(parallel.exit_code == 0);
    CHECK(parallel.output == r.output);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("enumerate --count 3").exit_code == 2);          // missing --type
    CHECK(run_cli("enumerate --type X4 --eps +2 --count 1").exit_code == 2);
    CHECK(run_cli("invariants --family nope -k 1 -l 2").exit_code == 2);
    CHECK(run_cli("ring").exit_code == 2);
}
