#include "pineta/family.hpp"

#include "pineta/error.hpp"

#include <numeric>
#include <stdexcept>

namespace pineta {

std::string family_token(Family f) {
    switch (f) {
        case Family::CaseI: return "caseI";
        case Family::CaseII: return "caseII";
        case Family::Brieskorn: return "brieskorn";
    }
    throw std::logic_error("bad Family value");
}

Family parse_family(const std::string& token) {
    if (token == "caseI") return Family::CaseI;
    if (token == "caseII") return Family::CaseII;
    if (token == "brieskorn") return Family::Brieskorn;
    throw ValidationError("unknown family '" + token + "' (expected caseI, caseII or brieskorn)");
}

FamilyDescriptor FamilyDescriptor::circle_bundle(Family f, long long k, long long l) {
    if (f == Family::Brieskorn)
        throw ValidationError("the Brieskorn family takes a degree d, not weights (k,l)");
    if (k % 2 == 0) throw ValidationError("k must be odd");
    if (l % 2 != 0) throw ValidationError("l must be even");
    unsigned long long ak = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(k);
    unsigned long long al = l < 0 ? 0ULL - static_cast<unsigned long long>(l)
                                  : static_cast<unsigned long long>(l);
    if (std::gcd(ak, al) != 1) throw ValidationError("k and l must be coprime");
    return FamilyDescriptor(f, k, l, 0);
}

FamilyDescriptor FamilyDescriptor::case_i(long long k, long long l) {
    return circle_bundle(Family::CaseI, k, l);
}

FamilyDescriptor FamilyDescriptor::case_ii(long long k, long long l) {
    return circle_bundle(Family::CaseII, k, l);
}

FamilyDescriptor FamilyDescriptor::brieskorn(long long d) {
    if (d < 0) throw ValidationError("d must be nonnegative");
    if (d % 2 != 0) throw ValidationError("d must be even");
    return FamilyDescriptor(Family::Brieskorn, 0, 0, d);
}

long long FamilyDescriptor::k() const {
    if (!is_circle_bundle()) throw std::logic_error("k is undefined for the Brieskorn family");
    return k_;
}

long long FamilyDescriptor::l() const {
    if (!is_circle_bundle()) throw std::logic_error("l is undefined for the Brieskorn family");
    return l_;
}

long long FamilyDescriptor::d() const {
    if (is_circle_bundle()) throw std::logic_error("d is undefined for circle-bundle families");
    return d_;
}

std::string FamilyDescriptor::str() const {
    switch (family_) {
        case Family::CaseI:
            return "X_{" + std::to_string(k_) + "," + std::to_string(l_) + "}";
        case Family::CaseII:
            return "Xbar_{" + std::to_string(k_) + "," + std::to_string(l_) + "}";
        case Family::Brieskorn:
            return "Q(" + std::to_string(d_) + ")";
    }
    throw std::logic_error("bad Family value");
}

SignConvention::SignConvention(int epsilon) : epsilon_(epsilon) {
    if (epsilon != 1 && epsilon != -1)
        throw ValidationError("epsilon must be +1 or -1");
}

BordismClass BordismClass::from_integer(const Integer& x) {
    Integer r = x % 16;
    if (r < 0) r += 16;
    int residue = static_cast<int>(r);
    return BordismClass(std::min(residue, 16 - residue));
}

BordismClass BordismClass::from_rational(const Rational& q) {
    if (!is_integer(q))
        throw std::logic_error("bordism class is not an integer: " + to_string(q));
    return from_integer(numerator(q));
}

}  // namespace pineta
