#include "pineta/element.hpp"

#include "pineta/error.hpp"

namespace pineta {

namespace {

void require_presentation(const PresentationPtr& p) {
    if (!p) throw ValidationError("element has no presentation attached");
}

}  // namespace

RingElement RingElement::zero(PresentationPtr p) {
    require_presentation(p);
    return RingElement(std::move(p), {});
}

RingElement RingElement::constant(PresentationPtr p, Rational value) {
    require_presentation(p);
    Poly t;
    if (value != 0) t[Monomial(p->generators().size())] = std::move(value);
    return RingElement(std::move(p), std::move(t));
}

RingElement RingElement::generator(PresentationPtr p, std::string_view name) {
    require_presentation(p);
    std::size_t i = p->generator_index(name);
    if (i == RingPresentation::npos)
        throw ValidationError("unknown generator '" + std::string(name) + "'");
    Monomial m = Monomial::generator(p->generators().size(), i);
    return monomial(std::move(p), m);
}

RingElement RingElement::monomial(PresentationPtr p, const Monomial& m, Rational coeff) {
    Poly raw;
    raw[m] = std::move(coeff);
    return from_terms(std::move(p), raw);
}

RingElement RingElement::from_terms(PresentationPtr p, const Poly& raw) {
    require_presentation(p);
    Poly reduced;
    for (const auto& [m, c] : raw) {
        if (c == 0) continue;
        if (m.size() != p->generators().size())
            throw ValidationError("monomial arity does not match the presentation");
        if (p->degree_of(m) > p->top_degree()) continue;  // truncate
        for (const auto& [nm, nc] : p->normal_form(m)) {
            Rational& slot = reduced[nm];
            slot += c * nc;
            if (slot == 0) reduced.erase(nm);
        }
    }
    return RingElement(std::move(p), std::move(reduced));
}

int RingElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, pres_->degree_of(m));
    return d;
}

bool RingElement::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = pres_->degree_of(m);
        if (d == -1) d = dm;
        if (dm != d) return false;
    }
    return true;
}

bool RingElement::is_homogeneous_of_degree(int d) const {
    for (const auto& [m, c] : terms_)
        if (pres_->degree_of(m) != d) return false;
    return true;
}

RingElement RingElement::degree_component(int d) const {
    Poly t;
    for (const auto& [m, c] : terms_)
        if (pres_->degree_of(m) == d) t[m] = c;
    return RingElement(pres_, std::move(t));
}

Rational RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::require_same_presentation(const RingElement& a, const RingElement& b) {
    require_presentation(a.pres_);
    require_presentation(b.pres_);
    if (a.pres_.get() != b.pres_.get())
        throw ValidationError("presentation mismatch: '" + a.pres_->name() + "' vs '" +
                              b.pres_->name() + "'");
}

RingElement RingElement::operator-() const {
    Poly t = terms_;
    for (auto& [m, c] : t) c = -c;
    return RingElement(pres_, std::move(t));
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
    require_same_presentation(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        Rational& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
    require_same_presentation(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        Rational& slot = terms_[m];
        slot -= c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
    require_same_presentation(*this, rhs);
    const int top = pres_->top_degree();
    Poly product;
    for (const auto& [ma, ca] : terms_) {
        int da = pres_->degree_of(ma);
        for (const auto& [mb, cb] : rhs.terms_) {
            if (da + pres_->degree_of(mb) > top) continue;  // truncate
            Rational coeff = ca * cb;
            for (const auto& [nm, nc] : pres_->normal_form(ma.times(mb))) {
                Rational& slot = product[nm];
                slot += coeff * nc;
                if (slot == 0) product.erase(nm);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
    require_presentation(pres_);
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

RingElement RingElement::pow(unsigned exponent) const {
    require_presentation(pres_);
    RingElement result = constant(pres_, 1);
    for (unsigned i = 0; i < exponent; ++i) result *= *this;
    return result;
}

bool RingElement::operator==(const RingElement& rhs) const {
    if (pres_.get() != rhs.pres_.get()) return false;
    return terms_ == rhs.terms_;
}

std::string RingElement::str() const {
    if (!pres_) return "0";
    return pres_->poly_str(terms_);
}

RingElement reduce(const RingElement& e) {
    if (!e.presentation()) return e;
    return RingElement::from_terms(e.presentation(), e.terms());
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement scale(const Rational& q, const RingElement& a) { return q * a; }

Rational pair_fundamental(const RingElement& e) {
    const PresentationPtr& p = e.presentation();
    require_presentation(p);
    return e.coefficient(p->top_basis_monomial()) / p->orientation_coefficient();
}

Mod2Element Mod2Element::zero(PresentationPtr p) {
    require_presentation(p);
    return Mod2Element(std::move(p), {});
}

Mod2Element Mod2Element::from_monomials(PresentationPtr p, const Poly2& raw) {
    require_presentation(p);
    Poly2 reduced;
    for (const Monomial& m : raw) {
        if (m.size() != p->generators().size())
            throw ValidationError("monomial arity does not match the presentation");
        if (p->degree_of(m) > p->top_degree()) continue;
        for (const Monomial& nm : p->normal_form_mod2(m)) {
            auto [it, inserted] = reduced.insert(nm);
            if (!inserted) reduced.erase(it);
        }
    }
    return Mod2Element(std::move(p), std::move(reduced));
}

bool Mod2Element::is_homogeneous_of_degree(int d) const {
    for (const Monomial& m : terms_)
        if (pres_->degree_of(m) != d) return false;
    return true;
}

Mod2Element& Mod2Element::operator+=(const Mod2Element& rhs) {
    require_presentation(pres_);
    require_presentation(rhs.pres_);
    if (pres_.get() != rhs.pres_.get())
        throw ValidationError("presentation mismatch: '" + pres_->name() + "' vs '" +
                              rhs.pres_->name() + "'");
    for (const Monomial& m : rhs.terms_) {
        auto [it, inserted] = terms_.insert(m);
        if (!inserted) terms_.erase(it);
    }
    return *this;
}

Mod2Element& Mod2Element::operator*=(const Mod2Element& rhs) {
    require_presentation(pres_);
    require_presentation(rhs.pres_);
    if (pres_.get() != rhs.pres_.get())
        throw ValidationError("presentation mismatch: '" + pres_->name() + "' vs '" +
                              rhs.pres_->name() + "'");
    const int top = pres_->top_degree();
    Poly2 product;
    for (const Monomial& ma : terms_) {
        int da = pres_->degree_of(ma);
        for (const Monomial& mb : rhs.terms_) {
            if (da + pres_->degree_of(mb) > top) continue;
            for (const Monomial& nm : pres_->normal_form_mod2(ma.times(mb))) {
                auto [it, inserted] = product.insert(nm);
                if (!inserted) product.erase(it);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

bool Mod2Element::operator==(const Mod2Element& rhs) const {
    if (pres_.get() != rhs.pres_.get()) return false;
    return terms_ == rhs.terms_;
}

std::string Mod2Element::str() const {
    if (!pres_ || terms_.empty()) return "0";
    std::vector<Monomial> order(terms_.begin(), terms_.end());
    order = pres_->sorted_for_display(std::move(order));
    std::string s;
    for (const Monomial& m : order) {
        if (!s.empty()) s += " + ";
        s += pres_->monomial_str(m);
    }
    return s;
}

Mod2Element mod2(const RingElement& e) {
    const PresentationPtr& p = e.presentation();
    require_presentation(p);
    Poly2 raw;
    for (const auto& [m, c] : e.terms()) {
        if (!is_integer(c))
            throw ValidationError("cannot reduce a non-integral element mod 2");
        if (numerator(c) % 2 != 0) raw.insert(m);
    }
    return Mod2Element::from_monomials(p, raw);
}

}  // namespace pineta
