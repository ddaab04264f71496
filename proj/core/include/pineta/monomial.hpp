#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace pineta {

/// A commutative monomial in a fixed set of generators, stored as an
/// exponent vector indexed by generator declaration order.  Degrees are a
/// property of the presentation (generators may have degree > 1), so the
/// monomial itself only knows exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_generators) : exps_(num_generators, 0u) {}

    static Monomial generator(std::size_t num_generators, std::size_t index) {
        Monomial m(num_generators);
        m.exps_[index] = 1;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    bool is_unit() const {
        for (unsigned e : exps_)
            if (e != 0) return false;
        return true;
    }

    Monomial times(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] += other.exps_[i];
        return r;
    }

    /// Does *this divide m?
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    /// m / *this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r(m);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] -= exps_[i];
        return r;
    }

    Monomial& raise(std::size_t index, unsigned by) {
        exps_[index] += by;
        return *this;
    }

    // Container key order only; the presentation defines the semantic order.
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<unsigned> exps_;
};

}  // namespace pineta
