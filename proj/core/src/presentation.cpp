#include "pineta/presentation.hpp"

#include "pineta/error.hpp"

#include <algorithm>
#include <functional>

namespace pineta {

namespace {

void poly_strip_zeros(Poly& p) {
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
}

void poly_accumulate(Poly& dst, const Poly& src, const Rational& scale) {
    for (const auto& [m, c] : src) {
        Rational& slot = dst[m];
        slot += scale * c;
        if (slot == 0) dst.erase(m);
    }
}

void poly2_accumulate(Poly2& dst, const Poly2& src) {
    for (const Monomial& m : src) {
        auto [it, inserted] = dst.insert(m);
        if (!inserted) dst.erase(it);
    }
}

}  // namespace

PresentationPtr RingPresentation::create(std::vector<Generator> generators,
                                         std::vector<Poly> relations,
                                         Monomial orientation,
                                         int top_degree,
                                         std::string name) {
    // make_shared is unavailable with a private constructor
    auto* raw = new RingPresentation(std::move(generators), std::move(relations),
                                     std::move(orientation), top_degree, std::move(name));
    return PresentationPtr(raw);
}

RingPresentation::RingPresentation(std::vector<Generator> generators,
                                   std::vector<Poly> relations,
                                   Monomial orientation,
                                   int top_degree,
                                   std::string name)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      top_degree_(top_degree),
      orientation_(std::move(orientation)) {
    validate_generators();
    if (top_degree_ <= 0 || top_degree_ % 2 != 0)
        throw ValidationError("top_degree must be a positive even integer, got " +
                              std::to_string(top_degree_));
    if (orientation_.size() != generators_.size())
        throw ValidationError("orientation monomial has wrong arity");
    if (degree_of(orientation_) != top_degree_)
        throw ValidationError("orientation monomial must have degree " +
                              std::to_string(top_degree_) + ", got degree " +
                              std::to_string(degree_of(orientation_)));

    enumerate_monomials();
    build_rules(relations);
    compute_normal_forms();
    check_confluence();
    check_top_degree_rank();
}

void RingPresentation::validate_generators() const {
    if (generators_.empty())
        throw ValidationError("presentation needs at least one generator");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (g.name.empty())
            throw ValidationError("generator name must be nonempty");
        if (g.degree <= 0)
            throw ValidationError("generator '" + g.name + "' must have positive degree");
        if (g.degree % 2 != 0)
            throw ValidationError("generator '" + g.name + "' has odd degree " +
                                  std::to_string(g.degree) + "; odd degrees are unsupported");
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[j].name == g.name)
                throw ValidationError("duplicate generator name '" + g.name + "'");
    }
}

std::size_t RingPresentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return npos;
}

int RingPresentation::degree_of(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        d += static_cast<int>(m.exponent(i)) * generators_[i].degree;
    return d;
}

void RingPresentation::enumerate_monomials() {
    monomials_by_degree_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
    Monomial current(generators_.size());
    std::function<void(std::size_t, int)> walk = [&](std::size_t gen, int degree_left) {
        if (gen == generators_.size()) {
            monomials_by_degree_[static_cast<std::size_t>(top_degree_ - degree_left)].push_back(
                current);
            return;
        }
        int gdeg = generators_[gen].degree;
        for (unsigned e = 0;; ++e) {
            int used = static_cast<int>(e) * gdeg;
            if (used > degree_left) break;
            Monomial saved = current;
            current.raise(gen, e);
            walk(gen + 1, degree_left - used);
            current = saved;
        }
    };
    walk(0, top_degree_);
    for (auto& bucket : monomials_by_degree_)
        std::sort(bucket.begin(), bucket.end());
}

bool RingPresentation::rewrite_greater(const Monomial& a, const Monomial& b) const {
    if (a == b) return false;
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    // within the top degree the orientation class sorts below everything
    if (da == top_degree_) {
        if (a == orientation_) return false;
        if (b == orientation_) return true;
    }
    // later-declared generators weigh more
    for (std::size_t i = generators_.size(); i-- > 0;)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
    return false;
}

void RingPresentation::build_rules(const std::vector<Poly>& relations) {
    for (std::size_t r = 0; r < relations.size(); ++r) {
        Poly rel = relations[r];
        poly_strip_zeros(rel);
        if (rel.empty()) continue;  // vacuous

        const std::string label = "relation #" + std::to_string(r + 1);
        int deg = -1;
        for (const auto& [m, c] : rel) {
            if (m.size() != generators_.size())
                throw ValidationError(label + " has wrong arity");
            if (!is_integer(c))
                throw ValidationError(label + " must have integer coefficients");
            int d = degree_of(m);
            if (deg == -1) deg = d;
            if (d != deg)
                throw ValidationError("non-homogeneous " + label + ": " + poly_str(rel));
        }
        if (deg == 0)
            throw ValidationError("constant " + label + " would collapse the ring");
        if (deg > top_degree_)
            throw ValidationError(label + " has degree " + std::to_string(deg) +
                                  " above top_degree " + std::to_string(top_degree_));

        // orient: largest monomial rewrites to the rest
        auto lead = rel.begin();
        for (auto it = rel.begin(); it != rel.end(); ++it)
            if (rewrite_greater(it->first, lead->first)) lead = it;
        Rational lc = lead->second;
        Rule rule;
        rule.pivot = lead->first;
        for (const auto& [m, c] : rel)
            if (m != rule.pivot) rule.tail[m] = -c / lc;
        rules_.push_back(std::move(rule));

        // the same relation taken mod 2
        Poly2 rel2;
        for (const auto& [m, c] : rel)
            if (numerator(c) % 2 != 0) rel2.insert(m);
        if (!rel2.empty()) {
            auto lead2 = rel2.begin();
            for (auto it = rel2.begin(); it != rel2.end(); ++it)
                if (rewrite_greater(*it, *lead2)) lead2 = it;
            Rule2 rule2;
            rule2.pivot = *lead2;
            for (const Monomial& m : rel2)
                if (m != rule2.pivot) rule2.tail.insert(m);
            rules_mod2_.push_back(std::move(rule2));
        }
    }

    auto by_pivot_desc = [this](const auto& a, const auto& b) {
        return rewrite_greater(a.pivot, b.pivot);
    };
    std::stable_sort(rules_.begin(), rules_.end(), by_pivot_desc);
    std::stable_sort(rules_mod2_.begin(), rules_mod2_.end(), by_pivot_desc);
}

const Poly& RingPresentation::reduce_monomial(const Monomial& m,
                                              std::map<Monomial, Poly>& memo,
                                              std::set<Monomial>& in_progress) const {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    if (!in_progress.insert(m).second)
        throw ValidationError("non-confluent rewrite system: reduction cycles at " +
                              monomial_str(m));
    const Rule* applicable = nullptr;
    for (const Rule& r : rules_)
        if (r.pivot.divides(m)) {
            applicable = &r;
            break;
        }
    Poly nf;
    if (!applicable) {
        nf[m] = 1;
    } else {
        Monomial q = applicable->pivot.quotient_of(m);
        for (const auto& [t, c] : applicable->tail)
            poly_accumulate(nf, reduce_monomial(q.times(t), memo, in_progress), c);
    }
    in_progress.erase(m);
    return memo.emplace(m, std::move(nf)).first->second;
}

const Poly2& RingPresentation::reduce_monomial_mod2(const Monomial& m,
                                                    std::map<Monomial, Poly2>& memo,
                                                    std::set<Monomial>& in_progress) const {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    if (!in_progress.insert(m).second)
        throw ValidationError("non-confluent rewrite system mod 2: reduction cycles at " +
                              monomial_str(m));
    const Rule2* applicable = nullptr;
    for (const Rule2& r : rules_mod2_)
        if (r.pivot.divides(m)) {
            applicable = &r;
            break;
        }
    Poly2 nf;
    if (!applicable) {
        nf.insert(m);
    } else {
        Monomial q = applicable->pivot.quotient_of(m);
        for (const Monomial& t : applicable->tail)
            poly2_accumulate(nf, reduce_monomial_mod2(q.times(t), memo, in_progress));
    }
    in_progress.erase(m);
    return memo.emplace(m, std::move(nf)).first->second;
}

void RingPresentation::compute_normal_forms() {
    std::set<Monomial> stack;
    for (const auto& bucket : monomials_by_degree_)
        for (const Monomial& m : bucket) {
            reduce_monomial(m, normal_forms_, stack);
            reduce_monomial_mod2(m, normal_forms_mod2_, stack);
        }

    basis_by_degree_.assign(monomials_by_degree_.size(), {});
    for (std::size_t d = 0; d < monomials_by_degree_.size(); ++d)
        for (const Monomial& m : monomials_by_degree_[d]) {
            const Poly& nf = normal_forms_.at(m);
            if (nf.size() == 1 && nf.begin()->first == m && nf.begin()->second == 1)
                basis_by_degree_[d].push_back(m);
        }
}

void RingPresentation::check_confluence() const {
    // Exhaustive overlap check on the finite monomial set: every one-step
    // rewrite of every monomial must land on the same normal form.
    for (const auto& bucket : monomials_by_degree_)
        for (const Monomial& m : bucket) {
            const Poly& expected = normal_forms_.at(m);
            for (const Rule& r : rules_) {
                if (!r.pivot.divides(m)) continue;
                Monomial q = r.pivot.quotient_of(m);
                Poly got;
                for (const auto& [t, c] : r.tail)
                    poly_accumulate(got, normal_forms_.at(q.times(t)), c);
                if (got != expected)
                    throw ValidationError("non-confluent rewrite system: " + monomial_str(m) +
                                          " reduces to both " + poly_str(expected) + " and " +
                                          poly_str(got));
            }
            const Poly2& expected2 = normal_forms_mod2_.at(m);
            for (const Rule2& r : rules_mod2_) {
                if (!r.pivot.divides(m)) continue;
                Monomial q = r.pivot.quotient_of(m);
                Poly2 got;
                for (const Monomial& t : r.tail)
                    poly2_accumulate(got, normal_forms_mod2_.at(q.times(t)));
                if (got != expected2)
                    throw ValidationError("non-confluent rewrite system mod 2 at " +
                                          monomial_str(m));
            }
        }
}

void RingPresentation::check_top_degree_rank() {
    const auto& top_basis = basis_by_degree_[static_cast<std::size_t>(top_degree_)];
    if (top_basis.size() != 1)
        throw ValidationError("degree-" + std::to_string(top_degree_) +
                              " reduced basis has rank " + std::to_string(top_basis.size()) +
                              "; expected rank 1, spanned by the orientation class");
    top_basis_monomial_ = top_basis.front();
    const Poly& nf = normal_forms_.at(orientation_);
    if (nf.empty())
        throw ValidationError("orientation class " + monomial_str(orientation_) +
                              " vanishes in the quotient");
    // rank 1 forces nf to be a multiple of the basis monomial
    orientation_coeff_ = nf.begin()->second;
}

const std::vector<Monomial>& RingPresentation::monomials(int degree) const {
    static const std::vector<Monomial> empty;
    if (degree < 0 || degree > top_degree_) return empty;
    return monomials_by_degree_[static_cast<std::size_t>(degree)];
}

const std::vector<Monomial>& RingPresentation::basis(int degree) const {
    static const std::vector<Monomial> empty;
    if (degree < 0 || degree > top_degree_) return empty;
    return basis_by_degree_[static_cast<std::size_t>(degree)];
}

const Poly& RingPresentation::normal_form(const Monomial& m) const {
    auto it = normal_forms_.find(m);
    if (it == normal_forms_.end())
        throw ValidationError("monomial " + monomial_str(m) + " exceeds top_degree");
    return it->second;
}

const Poly2& RingPresentation::normal_form_mod2(const Monomial& m) const {
    auto it = normal_forms_mod2_.find(m);
    if (it == normal_forms_mod2_.end())
        throw ValidationError("monomial " + monomial_str(m) + " exceeds top_degree");
    return it->second;
}

bool RingPresentation::is_basis_monomial(const Monomial& m) const {
    const Poly& nf = normal_form(m);
    return nf.size() == 1 && nf.begin()->first == m && nf.begin()->second == 1;
}

std::vector<Monomial> RingPresentation::sorted_for_display(std::vector<Monomial> ms) const {
    std::sort(ms.begin(), ms.end(), [this](const Monomial& a, const Monomial& b) {
        int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a.exponents() > b.exponents();  // more of an earlier generator first
    });
    return ms;
}

std::string RingPresentation::monomial_str(const Monomial& m) const {
    if (m.is_unit()) return "1";
    std::string s;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += generators_[i].name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string RingPresentation::poly_str(const Poly& p) const {
    if (p.empty()) return "0";
    std::vector<Monomial> order;
    for (const auto& [m, c] : p) order.push_back(m);
    order = sorted_for_display(std::move(order));

    std::string s;
    for (const Monomial& m : order) {
        const Rational& c = p.at(m);
        Rational mag = abs(c);
        bool negative = c < 0;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (m.is_unit())
            s += to_string(mag);
        else if (mag == 1)
            s += monomial_str(m);
        else
            s += to_string(mag) + "*" + monomial_str(m);
    }
    return s;
}

}  // namespace pineta
