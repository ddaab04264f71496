#include "pineta/char_classes.hpp"

#include "pineta/error.hpp"
#include "pineta/signature.hpp"

#include <vector>

namespace pineta {

RingElement pontryagin_class(const PresentationPtr& p) {
    int sig = intersection_signature(p).signature;
    RingElement orientation = RingElement::monomial(p, p->orientation());
    return Rational(3 * sig) * orientation;
}

Mod2Element stiefel_whitney_class(const PresentationPtr& p) {
    const std::vector<Monomial>& basis = p->basis(2);
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> m = intersection_matrix(p);

    // GF(2) system: sum_j w_j M[i][j] = M[i][i] for all i
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational& q = (j < n) ? m[i][j] : m[i][i];
            if (!is_integer(q))
                throw ValidationError("intersection form is not integral; w2 is undefined");
            a[i][j] = static_cast<int>(numerator(q) % 2 != 0);
        }
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t r = row;
        while (r < n && a[r][col] == 0) ++r;
        if (r == n) continue;
        std::swap(a[r], a[row]);
        for (std::size_t k = 0; k < n; ++k)
            if (k != row && a[k][col])
                for (std::size_t c = 0; c <= n; ++c) a[k][c] ^= a[row][c];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (a[r][n])
            throw ValidationError("intersection form has no characteristic element mod 2");
    if (pivot_col.size() < n)
        throw ValidationError(
            "intersection form is degenerate mod 2; w2 is not determined uniquely");

    Poly2 terms;
    for (std::size_t r = 0; r < n; ++r)
        if (a[r][n]) terms.insert(basis[pivot_col[r]]);
    return Mod2Element::from_monomials(p, terms);
}

bool is_total_space_spin(const Mod2Element& w2_base, const RingElement& c1) {
    if (!c1.is_homogeneous_of_degree(2))
        throw ValidationError("c1 must be homogeneous of degree 2");
    if (w2_base.presentation().get() != c1.presentation().get())
        throw ValidationError("presentation mismatch between w2 and c1");
    if (w2_base.is_zero()) return true;
    return w2_base == mod2(c1);
}

}  // namespace pineta
