#include "pineta/classification.hpp"
#include "pineta/error.hpp"

#include <doctest.h>

#include <set>

using namespace pineta;

namespace {
const SignConvention kPlus = SignConvention::plus();
const SignConvention kMinus = SignConvention::minus();
}  // namespace

TEST_CASE("diffeo type parsing and printing") {
    DiffeoType x4 = DiffeoType::parse("X4");
    CHECK(x4.kind == DiffeoType::Kind::X);
    CHECK(x4.index == 4);
    CHECK(x4.str() == "X(4)");
    CHECK(x4.token() == "X4");
    CHECK(DiffeoType::parse("Q0").kind == DiffeoType::Kind::Q);
    CHECK_THROWS_AS(DiffeoType::parse("X3"), ValidationError);
    CHECK_THROWS_AS(DiffeoType::parse("Y4"), ValidationError);
    CHECK_THROWS_AS(DiffeoType::parse("X10"), ValidationError);
    CHECK(DiffeoType::make(DiffeoType::Kind::Q, 6) == DiffeoType::parse("Q6"));
    CHECK_THROWS_AS(DiffeoType::make(DiffeoType::Kind::X, 5), ValidationError);
    CHECK_THROWS_AS(DiffeoType::make(DiffeoType::Kind::X, 10), ValidationError);
}

TEST_CASE("classification of known members") {
    for (SignConvention s : {kPlus, kMinus}) {
        CHECK(classify(FamilyDescriptor::case_i(-1, 2), s) == DiffeoType::parse("X0"));
        CHECK(classify(FamilyDescriptor::case_i(3, 2), s) == DiffeoType::parse("X8"));
    }
    CHECK(classify(FamilyDescriptor::brieskorn(2), kPlus) == DiffeoType::parse("Q2"));
    CHECK(classify(FamilyDescriptor::brieskorn(18), kPlus) == DiffeoType::parse("Q2"));
    CHECK(classify(FamilyDescriptor::brieskorn(30), kPlus) == DiffeoType::parse("Q2"));  // 30 = -2 mod 16
}

TEST_CASE("representative lists reproduce the classification table") {
    std::vector<FamilyDescriptor> x4 = representatives(DiffeoType::parse("X4"), kPlus, 3);
    REQUIRE(x4.size() == 3);
    CHECK(x4[0] == FamilyDescriptor::case_i(1, 2));
    CHECK(x4[1] == FamilyDescriptor::case_i(9, 2));
    CHECK(x4[2] == FamilyDescriptor::case_i(17, 2));

    std::vector<FamilyDescriptor> q0 = representatives(DiffeoType::parse("Q0"), kPlus, 3);
    CHECK(q0[0] == FamilyDescriptor::brieskorn(0));
    CHECK(q0[1] == FamilyDescriptor::brieskorn(16));
    CHECK(q0[2] == FamilyDescriptor::brieskorn(32));

    std::vector<FamilyDescriptor> x6 = representatives(DiffeoType::parse("X6"), kMinus, 1);
    CHECK(x6[0] == FamilyDescriptor::case_ii(-3, 4));

    CHECK_THROWS_AS(representatives(DiffeoType::parse("X0"), kPlus, 0), ValidationError);
}

TEST_CASE("round-trip: every representative classifies back to its type") {
    for (char kind : {'X', 'Q'})
        for (int index = 0; index <= 8; index += 2) {
            DiffeoType t = DiffeoType::parse(std::string(1, kind) + std::to_string(index));
            for (SignConvention s : {kPlus, kMinus}) {
                CAPTURE(t.str());
                CAPTURE(s.str());
                for (const FamilyDescriptor& f : representatives(t, s, 50))
                    CHECK(classify(f, s) == t);
            }
        }
}

TEST_CASE("negative parameters are allowed on request and still round-trip") {
    std::vector<FamilyDescriptor> x0 = representatives(DiffeoType::parse("X0"), kPlus, 5, true);
    REQUIRE(x0.size() == 5);
    // r = 0, 1, -1, 2, -2
    CHECK(x0[0] == FamilyDescriptor::case_i(-1, 2));
    CHECK(x0[1] == FamilyDescriptor::case_i(7, 2));
    CHECK(x0[2] == FamilyDescriptor::case_i(-9, 2));
    CHECK(x0[3] == FamilyDescriptor::case_i(15, 2));
    CHECK(x0[4] == FamilyDescriptor::case_i(-17, 2));
    for (const FamilyDescriptor& f : x0) CHECK(classify(f, kPlus) == DiffeoType::parse("X0"));
}

TEST_CASE("the CaseI lists classify identically under both signs") {
    for (int index : {0, 4, 8}) {
        DiffeoType t = DiffeoType{DiffeoType::Kind::X, index};
        std::vector<FamilyDescriptor> plus_list = representatives(t, kPlus, 25);
        std::vector<FamilyDescriptor> minus_list = representatives(t, kMinus, 25);
        CHECK(plus_list == minus_list);  // the parameter family itself is sign-free
        for (const FamilyDescriptor& f : plus_list) {
            CHECK(classify(f, kPlus) == t);
            CHECK(classify(f, kMinus) == t);
        }
    }
}

TEST_CASE("sweep exhaustiveness over the admissible weights") {
    for (SignConvention s : {kPlus, kMinus}) {
        std::set<int> case_i_indices;
        for (long long l : {2LL, 4LL})
            for (long long k = -201; k <= 201; k += 2) {
                DiffeoType t = classify(FamilyDescriptor::case_i(k, l), s);
                CHECK(t.kind == DiffeoType::Kind::X);
                case_i_indices.insert(t.index);
            }
        CHECK(case_i_indices == std::set<int>{0, 4, 8});

        std::set<int> case_ii_indices;
        for (long long k = -201; k <= 201; k += 2) {
            DiffeoType t = classify(FamilyDescriptor::case_ii(k, 4), s);
            case_ii_indices.insert(t.index);
        }
        CHECK(case_ii_indices == std::set<int>{2, 6});
    }
}
