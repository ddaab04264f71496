#include "pineta/verify.hpp"

#include "pineta/char_classes.hpp"
#include "pineta/dsl.hpp"
#include "pineta/enumerate.hpp"
#include "pineta/signature.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace pineta {

namespace {

constexpr long long kSweepK = 201;          // |k| bound for the (k,l) sweeps
constexpr long long kSweepD = 400;          // d bound for the Brieskorn sweep
constexpr unsigned kPropertySeed = 0x9e3779b9u;

struct Failure {
    std::string detail;
};

using Check = std::function<void()>;

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::vector<FamilyDescriptor> sweep_circle_bundles() {
    std::vector<FamilyDescriptor> out;
    for (Family fam : {Family::CaseI, Family::CaseII})
        for (long long l : {2LL, 4LL})
            for (long long k = -kSweepK; k <= kSweepK; k += 2)
                out.push_back(FamilyDescriptor::circle_bundle(fam, k, l));
    return out;
}

RingElement random_element(std::mt19937_64& rng, const PresentationPtr& p) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> pick(0, 3);
    Poly terms;
    for (int d = 0; d <= p->top_degree(); d += 2)
        for (const Monomial& m : p->monomials(d))
            if (pick(rng) == 0) terms[m] = Rational(num(rng), den(rng));
    return RingElement::from_terms(p, terms);
}

RingElement random_degree2(std::mt19937_64& rng, const PresentationPtr& p) {
    std::uniform_int_distribution<int> num(-9, 9);
    Poly terms;
    for (const Monomial& m : p->monomials(2)) terms[m] = num(rng);
    return RingElement::from_terms(p, terms);
}

void suite_ring_presentations() {
    for (const std::string& name : builtin_names()) {
        PresentationPtr p = builtin_presentation(name);
        expect(p->basis(0).size() == 1 && p->basis(2).size() == 2 && p->basis(4).size() == 1,
               name + ": reduced basis ranks differ from (1,2,1)");
        RingElement orientation = RingElement::monomial(p, p->orientation());
        expect(pair_fundamental(orientation) == 1, name + ": orientation does not pair to 1");
    }
    PresentationPtr ci = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(ci, "u");
    RingElement v = RingElement::generator(ci, "v");
    expect(u * u == -(u * v), "caseI: u*u != -u*v");
    PresentationPtr cii = builtin_presentation(kCaseIIPresentation);
    RingElement ub = RingElement::generator(cii, "u");
    RingElement vb = RingElement::generator(cii, "v");
    expect(vb * vb == Rational(2) * (ub * ub), "caseII: v*v != 2*u^2");
    expect(pair_fundamental(ub * vb) == -1, "caseII: <u*v> != -1");
}

void suite_signatures() {
    expect(intersection_signature(builtin_presentation(kCaseIPresentation)).signature == 0,
           "caseI signature != 0");
    expect(intersection_signature(builtin_presentation(kCaseIIPresentation)).signature == 2,
           "caseII signature != 2");
    PresentationPtr torus_like = parse_presentation(
        "generators: u:2, v:2 / relations: u^2, v^2 / orientation: u*v", "hyperbolic");
    SignatureResult r = intersection_signature(torus_like);
    expect(r.signature == 0 && !r.degenerate, "hyperbolic form signature != 0");
}

void suite_pairing_closed_forms() {
    for (const FamilyDescriptor& f : sweep_circle_bundles()) {
        Integer got = c_squared_pairing(f);
        Integer k(f.k()), l(f.l());
        Integer want = f.family() == Family::CaseI ? Integer(-l * l - 2 * k * l)
                                                   : Integer(l * l + 2 * k * l + 2 * k * k);
        expect(got == want, f.str() + ": <c^2> = " + got.str() + ", closed form " + want.str());
    }
}

void suite_eta_oracle() {
    for (const FamilyDescriptor& f : sweep_circle_bundles()) {
        EtaValue closed = eta_closed_form(f);
        EtaValue fixed = eta_via_fixed_points(f);
        expect(closed.magnitude == fixed.magnitude && !closed.sign_known && !fixed.sign_known,
               f.str() + ": closed form " + closed.str() + " vs fixed points " + fixed.str());
    }
    for (long long d = 0; d <= kSweepD; d += 2) {
        FamilyDescriptor f = FamilyDescriptor::brieskorn(d);
        EtaValue fixed = eta_via_fixed_points(f);
        expect(fixed.sign_known && fixed.signed_value() == Rational(-d, 4),
               f.str() + ": eta " + fixed.str() + " != -d/4");
        expect(eta_closed_form(f) == fixed, f.str() + ": closed form disagrees");
    }
}

void suite_classification_round_trip() {
    for (char kind : {'X', 'Q'})
        for (int index = 0; index <= 8; index += 2) {
            DiffeoType t = DiffeoType::parse(std::string(1, kind) + std::to_string(index));
            for (SignConvention s : {SignConvention::plus(), SignConvention::minus()}) {
                std::vector<FamilyDescriptor> reps = representatives(t, s, 50);
                for (const FamilyDescriptor& f : reps)
                    expect(classify(f, s) == t,
                           f.str() + " classifies as " + classify(f, s).str() + ", expected " +
                               t.str());
            }
        }
    // the X(4) and X(8) lists from the classification table
    SignConvention plus = SignConvention::plus();
    std::vector<FamilyDescriptor> x4 = representatives(DiffeoType::parse("X4"), plus, 3);
    expect(x4[0] == FamilyDescriptor::case_i(1, 2) && x4[1] == FamilyDescriptor::case_i(9, 2) &&
               x4[2] == FamilyDescriptor::case_i(17, 2),
           "X(4) list is not X_{8r+1,2}");
    std::vector<FamilyDescriptor> x8 = representatives(DiffeoType::parse("X8"), plus, 3);
    expect(x8[0] == FamilyDescriptor::case_i(3, 2) && x8[1] == FamilyDescriptor::case_i(11, 2) &&
               x8[2] == FamilyDescriptor::case_i(19, 2),
           "X(8) list is not X_{8r+3,2}");
}

void suite_moduli_distinctness() {
    for (char kind : {'X', 'Q'})
        for (int index = 0; index <= 8; index += 2) {
            DiffeoType t = DiffeoType::parse(std::string(1, kind) + std::to_string(index));
            for (SignConvention s : {SignConvention::plus(), SignConvention::minus()}) {
                ModuliTable table = build_moduli_table(t, s, 100);
                expect(table.distinct_count == 100,
                       t.str() + " eps " + s.str() + ": only " +
                           std::to_string(table.distinct_count) + " distinct eta magnitudes");
                if (t.kind == DiffeoType::Kind::Q) break;  // epsilon plays no role
            }
        }
    // explicit forms: X(4) has |eta| = 4r+1, Q(d) has eta = -d/4 - 4m
    ModuliTable x4 = build_moduli_table(DiffeoType::parse("X4"), SignConvention::plus(), 100);
    for (std::size_t r = 0; r < x4.rows.size(); ++r)
        expect(x4.rows[r].eta.magnitude == Rational(4 * r + 1),
               "X(4) row " + std::to_string(r) + ": |eta| != 4r+1");
    for (int index = 0; index <= 8; index += 2) {
        DiffeoType t{DiffeoType::Kind::Q, index};
        ModuliTable table = build_moduli_table(t, std::nullopt, 100);
        for (std::size_t m = 0; m < table.rows.size(); ++m)
            expect(table.rows[m].eta.sign_known &&
                       table.rows[m].eta.signed_value() ==
                           Rational(-index, 4) - Rational(4) * static_cast<long long>(m),
                   t.str() + " row " + std::to_string(m) + ": eta != -d/4 - 4m");
    }
}

void suite_spin_checks() {
    for (const FamilyDescriptor& f : sweep_circle_bundles()) {
        SpinReport r = w2_report(f);
        expect(r.base_w2_nonzero && r.n_spin && !r.x_spin,
               f.str() + ": spin report (w2!=0, N, X) = (" + std::to_string(r.base_w2_nonzero) +
                   "," + std::to_string(r.n_spin) + "," + std::to_string(r.x_spin) + ")");
    }
}

void suite_properties() {
    std::mt19937_64 rng(kPropertySeed);
    for (const std::string& name : builtin_names()) {
        PresentationPtr p = builtin_presentation(name);
        for (int i = 0; i < 500; ++i) {
            RingElement a = random_element(rng, p);
            RingElement b = random_element(rng, p);
            RingElement c = random_element(rng, p);
            expect(a * b == b * a, name + ": commutativity fails");
            expect((a * b) * c == a * (b * c), name + ": associativity fails");
            expect(a * (b + c) == a * b + a * c, name + ": distributivity fails");
            expect(reduce(a) == a, name + ": reduction is not idempotent");
            expect(pair_fundamental(a + b) == pair_fundamental(a) + pair_fundamental(b),
                   name + ": pairing is not additive");
            Rational q(i - 250, 7);
            expect(pair_fundamental(q * a) == q * pair_fundamental(a),
                   name + ": pairing is not homogeneous");

            RingElement x = random_degree2(rng, p);
            expect(inv_cosh_half(x) == inv_cosh_half(-x), name + ": 1/cosh(c/2) is not even");
            expect(exp_half(x) * exp_half(-x) == RingElement::constant(p, 1),
                   name + ": exp(c/2)*exp(-c/2) != 1");
            RingElement zero = RingElement::zero(p);
            SignAmbiguousRational plus_c = local_contribution_codim2(zero, x, zero);
            SignAmbiguousRational minus_c = local_contribution_codim2(zero, -x, zero);
            expect(plus_c == minus_c, name + ": local contribution not even in the fiber class");
        }
    }
    std::uniform_int_distribution<long long> anyint(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
        long long x = anyint(rng);
        BordismClass c = BordismClass::from_integer(Integer(x));
        expect(c.canonical() >= 0 && c.canonical() <= 8, "bordism canonical out of range");
        expect(c == BordismClass::from_integer(Integer(-x)), "canonical(x) != canonical(-x)");
        expect(c == BordismClass::from_integer(Integer(x + 16)),
               "canonical(x) != canonical(x+16)");
    }
}

SuiteResult run_one(const std::string& name, const Check& check) {
    try {
        check();
        return {name, true, ""};
    } catch (const Failure& f) {
        return {name, false, f.detail};
    } catch (const std::exception& e) {
        return {name, false, std::string("unexpected error: ") + e.what()};
    }
}

}  // namespace

std::vector<SuiteResult> run_verification(bool parallel) {
    const std::vector<std::pair<std::string, Check>> suites = {
        {"ring presentations", suite_ring_presentations},
        {"intersection signatures", suite_signatures},
        {"pairing closed forms", suite_pairing_closed_forms},
        {"eta closed-form vs fixed-point", suite_eta_oracle},
        {"classification round-trip", suite_classification_round_trip},
        {"moduli distinctness", suite_moduli_distinctness},
        {"spin checks", suite_spin_checks},
        {"ring axioms and properties", suite_properties},
    };

    std::vector<SuiteResult> results;
    if (parallel) {
        std::vector<std::future<SuiteResult>> futures;
        for (const auto& [name, check] : suites)
            futures.push_back(std::async(std::launch::async, run_one, name, check));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (const auto& [name, check] : suites) results.push_back(run_one(name, check));
    }
    return results;
}

bool all_passed(std::span<const SuiteResult> results) {
    for (const SuiteResult& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace pineta
