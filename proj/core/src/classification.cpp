#include "pineta/classification.hpp"

#include "pineta/error.hpp"
#include "pineta/invariants.hpp"

#include <stdexcept>

namespace pineta {

DiffeoType DiffeoType::make(Kind kind, int index) {
    if (index < 0 || index > 8 || index % 2 != 0)
        throw ValidationError("diffeomorphism type index must be one of 0, 2, 4, 6, 8");
    return DiffeoType{kind, index};
}

DiffeoType DiffeoType::parse(std::string_view token) {
    if (token.size() == 2 && (token[0] == 'X' || token[0] == 'Q') && token[1] >= '0' &&
        token[1] <= '8' && (token[1] - '0') % 2 == 0)
        return DiffeoType{token[0] == 'X' ? Kind::X : Kind::Q, token[1] - '0'};
    throw ValidationError("unknown type '" + std::string(token) +
                          "' (expected one of X0, X2, X4, X6, X8, Q0, Q2, Q4, Q6, Q8)");
}

std::string DiffeoType::str() const {
    return std::string(kind == Kind::X ? "X" : "Q") + "(" + std::to_string(index) + ")";
}

std::string DiffeoType::token() const {
    return std::string(kind == Kind::X ? "X" : "Q") + std::to_string(index);
}

DiffeoType classify(const FamilyDescriptor& f, SignConvention s) {
    BordismClass cls = bordism_class(f, s);
    if (cls.canonical() % 2 != 0)
        throw std::logic_error("odd canonical bordism class " +
                               std::to_string(cls.canonical()) + " for " + f.str());
    // the circle-bundle families have trivial pi_1 action on pi_2; the
    // Brieskorn involution acts non-trivially
    return DiffeoType{f.is_circle_bundle() ? DiffeoType::Kind::X : DiffeoType::Kind::Q,
                      cls.canonical()};
}

namespace {

long long r_at(int i, bool allow_negative) {
    if (!allow_negative) return i;
    if (i == 0) return 0;
    return i % 2 == 1 ? (i + 1) / 2 : -(i / 2);  // 0, 1, -1, 2, -2, ...
}

}  // namespace

std::vector<FamilyDescriptor> representatives(DiffeoType t, SignConvention s, int count,
                                              bool allow_negative_r) {
    if (count < 1) throw ValidationError("count must be at least 1");

    std::vector<FamilyDescriptor> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        long long r = r_at(i, allow_negative_r);
        FamilyDescriptor desc = [&] {
            if (t.kind == DiffeoType::Kind::Q)
                return FamilyDescriptor::brieskorn(t.index + 16 * static_cast<long long>(i));
            switch (t.index) {
                case 0: return FamilyDescriptor::case_i(8 * r - 1, 2);
                case 4: return FamilyDescriptor::case_i(8 * r + 1, 2);
                case 8: return FamilyDescriptor::case_i(8 * r + 3, 2);
                case 2: return FamilyDescriptor::case_ii(8 * r + 2 * s.epsilon() + 3, 4);
                case 6: return FamilyDescriptor::case_ii(8 * r + 2 * s.epsilon() - 1, 4);
            }
            throw std::logic_error("bad DiffeoType index");
        }();
        if (classify(desc, s) != t)
            throw std::logic_error("representative " + desc.str() + " does not classify as " +
                                   t.str());
        out.push_back(desc);
    }
    return out;
}

}  // namespace pineta
