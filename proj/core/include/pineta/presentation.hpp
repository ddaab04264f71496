#pragma once

#include "pineta/monomial.hpp"
#include "pineta/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pineta {

struct Generator {
    std::string name;
    int degree;  // even, positive
};

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// Sparse polynomial over the monomials of a presentation.
using Poly = std::map<Monomial, Rational>;
/// Mod-2 polynomial: the set of monomials with odd coefficient.
using Poly2 = std::set<Monomial>;

/// A graded quotient of a polynomial ring on even-degree generators,
/// truncated above `top_degree`.  Presents the integral cohomology ring of a
/// closed oriented 4-manifold: the `orientation` monomial is declared to pair
/// to 1 with the fundamental class.
///
/// Construction validates the presentation:
///   * generator degrees are even and positive, names unique;
///   * every relation is homogeneous of degree between 2 and top_degree,
///     with integer coefficients;
///   * the oriented rewrite rules terminate and are confluent on the finite
///     set of monomials of degree <= top_degree (exhaustive overlap check),
///     both over Q and mod 2;
///   * the reduced basis in the top degree has rank 1, spanned by the normal
///     form of the orientation monomial.
///
/// Relations are oriented by their largest monomial.  Monomials compare by
/// total degree, then by exponents of later-declared generators; within the
/// top degree the orientation monomial sorts below everything else, so normal
/// forms there canonicalize onto the orientation class.
///
/// Instances are immutable after construction; all queries are const and safe
/// to share across threads.
class RingPresentation {
public:
    static PresentationPtr create(std::vector<Generator> generators,
                                  std::vector<Poly> relations,
                                  Monomial orientation,
                                  int top_degree = 4,
                                  std::string name = "");

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    int top_degree() const { return top_degree_; }
    const Monomial& orientation() const { return orientation_; }

    /// Declaration index of a generator, or npos.
    std::size_t generator_index(std::string_view name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    int degree_of(const Monomial& m) const;

    /// All monomials of the given degree (empty for degrees not realized).
    const std::vector<Monomial>& monomials(int degree) const;

    /// Reduced-basis monomials of the given degree (normal forms).
    const std::vector<Monomial>& basis(int degree) const;

    /// Normal form of a monomial of degree <= top_degree.
    const Poly& normal_form(const Monomial& m) const;
    const Poly2& normal_form_mod2(const Monomial& m) const;

    bool is_basis_monomial(const Monomial& m) const;

    /// The single basis monomial of the top degree and the coefficient of the
    /// orientation class on it: normal_form(orientation) == coeff * monomial.
    const Monomial& top_basis_monomial() const { return top_basis_monomial_; }
    const Rational& orientation_coefficient() const { return orientation_coeff_; }

    std::size_t rule_count() const { return rules_.size(); }

    /// Display order: ascending degree, then ascending exponent vectors read
    /// from the first generator (so u^2 prints before u*v before v^2).
    std::vector<Monomial> sorted_for_display(std::vector<Monomial> ms) const;

    std::string monomial_str(const Monomial& m) const;
    std::string poly_str(const Poly& p) const;

private:
    RingPresentation(std::vector<Generator> generators,
                     std::vector<Poly> relations,
                     Monomial orientation,
                     int top_degree,
                     std::string name);

    struct Rule {
        Monomial pivot;
        Poly tail;  // pivot rewrites to tail; same degree, coeff already negated/normalized
    };
    struct Rule2 {
        Monomial pivot;
        Poly2 tail;
    };

    // true iff a > b in the rewrite order described above
    bool rewrite_greater(const Monomial& a, const Monomial& b) const;

    void validate_generators() const;
    void enumerate_monomials();
    void build_rules(const std::vector<Poly>& relations);
    void compute_normal_forms();
    void check_confluence() const;
    void check_top_degree_rank();

    const Poly& reduce_monomial(const Monomial& m,
                                std::map<Monomial, Poly>& memo,
                                std::set<Monomial>& in_progress) const;
    const Poly2& reduce_monomial_mod2(const Monomial& m,
                                      std::map<Monomial, Poly2>& memo,
                                      std::set<Monomial>& in_progress) const;

    std::string name_;
    std::vector<Generator> generators_;
    int top_degree_;
    Monomial orientation_;

    std::vector<std::vector<Monomial>> monomials_by_degree_;
    std::vector<std::vector<Monomial>> basis_by_degree_;
    std::vector<Rule> rules_;
    std::vector<Rule2> rules_mod2_;
    std::map<Monomial, Poly> normal_forms_;
    std::map<Monomial, Poly2> normal_forms_mod2_;

    Monomial top_basis_monomial_;
    Rational orientation_coeff_;
};

}  // namespace pineta
