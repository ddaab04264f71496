#include "pineta/error.hpp"
#include "pineta/format.hpp"

#include <doctest.h>

using namespace pineta;

TEST_CASE("moduli tables carry strictly growing eta magnitudes") {
    ModuliTable x4 = build_moduli_table(DiffeoType::parse("X4"), SignConvention::plus(), 3);
    REQUIRE(x4.rows.size() == 3);
    CHECK(x4.distinct_count == 3);
    CHECK(x4.rows[0].eta.magnitude == 1);
    CHECK(x4.rows[1].eta.magnitude == 5);
    CHECK(x4.rows[2].eta.magnitude == 9);
    for (const ModuliRow& r : x4.rows) CHECK(r.bordism.canonical() == 4);

    ModuliTable q0 = build_moduli_table(DiffeoType::parse("Q0"), std::nullopt, 3);
    CHECK(q0.distinct_count == 3);
    CHECK(q0.rows[0].eta.signed_value() == 0);
    CHECK(q0.rows[1].eta.signed_value() == -4);
    CHECK(q0.rows[2].eta.signed_value() == -8);
    CHECK_FALSE(q0.epsilon.has_value());

    ModuliTable single = build_moduli_table(DiffeoType::parse("X4"), SignConvention::plus(), 1);
    CHECK(single.rows.size() == 1);
    CHECK(single.distinct_count == 1);
}

TEST_CASE("X types require a sign convention") {
    CHECK_THROWS_AS(build_moduli_table(DiffeoType::parse("X4"), std::nullopt, 2),
                    ValidationError);
}

TEST_CASE("negative parameters can repeat a magnitude without tripping the check") {
    // X(0) at r and -r has |eta| = 4|r| twice
    ModuliTable x0 = build_moduli_table(DiffeoType::parse("X0"), SignConvention::plus(), 5, true);
    CHECK(x0.rows.size() == 5);
    CHECK(x0.distinct_count == 3);  // 0, 4, 8 from r = 0, 1, -1, 2, -2
}

TEST_CASE("parallel row computation yields the identical table") {
    ModuliTable serial = build_moduli_table(DiffeoType::parse("X6"), SignConvention::minus(), 40);
    ModuliTable parallel =
        build_moduli_table(DiffeoType::parse("X6"), SignConvention::minus(), 40, false, true);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].descriptor == parallel.rows[i].descriptor);
        CHECK(serial.rows[i].eta == parallel.rows[i].eta);
    }
    CHECK(render_csv(schema_rows(serial)) == render_csv(schema_rows(parallel)));
}

TEST_CASE("csv output is deterministic and matches the schema") {
    ModuliTable x4 = build_moduli_table(DiffeoType::parse("X4"), SignConvention::plus(), 2);
    std::string csv = render_csv(schema_rows(x4));
    CHECK(csv ==
          "family,k,l,d,epsilon,bordism,eta_num,eta_den,eta_sign_known,diffeo_type\n"
          "caseI,1,2,,+1,4,1,1,false,X4\n"
          "caseI,9,2,,+1,4,5,1,false,X4\n");
    CHECK(csv == render_csv(schema_rows(
                     build_moduli_table(DiffeoType::parse("X4"), SignConvention::plus(), 2))));

    ModuliTable q2 = build_moduli_table(DiffeoType::parse("Q2"), std::nullopt, 2);
    CHECK(render_csv(schema_rows(q2)) ==
          "family,k,l,d,epsilon,bordism,eta_num,eta_den,eta_sign_known,diffeo_type\n"
          "brieskorn,,,2,,2,-1,2,true,Q2\n"
          "brieskorn,,,18,,2,-9,2,true,Q2\n");
}

TEST_CASE("json output mirrors the csv schema") {
    ModuliTable x6 = build_moduli_table(DiffeoType::parse("X6"), SignConvention::plus(), 1);
    std::string json = render_json(schema_rows(x6));
    CHECK(json == R"([
  {
    "family": "caseII",
    "k": 1,
    "l": 4,
    "d": null,
    "epsilon": 1,
    "bordism": 6,
    "eta_num": "7",
    "eta_den": "2",
    "eta_sign_known": false,
    "diffeo_type": "X6"
  }
])"
                      "\n");
}

TEST_CASE("invariant reports collect the per-sign data") {
    InvariantReport r = build_invariant_report(
        FamilyDescriptor::case_i(1, 2), {SignConvention::plus(), SignConvention::minus()});
    REQUIRE(r.by_epsilon.size() == 2);
    CHECK(r.by_epsilon[0].bordism.canonical() == 4);
    CHECK(r.by_epsilon[1].bordism.canonical() == 4);
    CHECK(r.by_epsilon[0].type == DiffeoType::parse("X4"));
    CHECK(r.eta_closed.magnitude == 1);
    CHECK(r.eta_fixed_points.magnitude == 1);
    REQUIRE(r.c_squared.has_value());
    CHECK(*r.c_squared == -8);
    REQUIRE(r.spin.has_value());
    CHECK(r.spin->n_spin);
    CHECK_FALSE(r.spin->x_spin);
    CHECK(r.base_signature == 0);

    InvariantReport q = build_invariant_report(FamilyDescriptor::brieskorn(4),
                                               {SignConvention::plus(), SignConvention::minus()});
    CHECK(q.by_epsilon.size() == 1);  // the sign plays no role
    CHECK(q.eta_closed.signed_value() == -1);
    CHECK_FALSE(q.chern.has_value());

    std::vector<SchemaRow> rows = schema_rows(q);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].d == 4);
    CHECK_FALSE(rows[0].epsilon.has_value());
}
