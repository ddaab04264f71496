#include "pineta/signature.hpp"

namespace pineta {

std::vector<std::vector<Rational>> intersection_matrix(const PresentationPtr& p) {
    const std::vector<Monomial>& basis = p->basis(2);
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        RingElement gi = RingElement::monomial(p, basis[i]);
        for (std::size_t j = i; j < n; ++j) {
            RingElement gj = RingElement::monomial(p, basis[j]);
            m[i][j] = m[j][i] = pair_fundamental(gi * gj);
        }
    }
    return m;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

}  // namespace

SignatureResult intersection_signature(const PresentationPtr& p) {
    std::vector<std::vector<Rational>> m = intersection_matrix(p);
    const std::size_t n = m.size();

    SignatureResult result;
    result.determinant = determinant(m);

    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all remaining diagonal entries vanish; a nonzero off-diagonal
            // entry m[i][j] is repaired with the congruence e_i <- e_i + e_j,
            // which makes the new diagonal entry 2*m[i][j]
            std::size_t oi = n, oj = n;
            for (std::size_t i = 0; i < n && oi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && m[i][j] != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            }
            if (oi == n) {
                // the rest of the form is identically zero
                result.degenerate = true;
                break;
            }
            for (std::size_t k = 0; k < n; ++k) m[oi][k] += m[oj][k];
            for (std::size_t k = 0; k < n; ++k) m[k][oi] += m[k][oj];
            piv = oi;
        }

        const Rational d = m[piv][piv];
        result.signature += d > 0 ? 1 : -1;
        result.rank += 1;
        done[piv] = true;
        // split off the pivot: congruence e_k <- e_k - (m[k][piv]/d) e_piv
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k] || m[k][piv] == 0) continue;
            Rational f = m[k][piv] / d;
            for (std::size_t c = 0; c < n; ++c) m[k][c] -= f * m[piv][c];
            for (std::size_t c = 0; c < n; ++c) m[c][k] -= f * m[c][piv];
        }
    }

    return result;
}

}  // namespace pineta
