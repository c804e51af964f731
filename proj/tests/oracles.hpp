#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// subresultant/gcd code paths so they can vouch for them.

#include <random>
#include <vector>

#include "jacinf/poly.hpp"
#include "jacinf/tower.hpp"

namespace jacinf::testing {

// Resultant via Laplace expansion of the Sylvester matrix. Exponential in
// the matrix size; fine for the small fixtures used in tests.
inline Poly det_laplace(std::vector<std::vector<Poly>>& m, std::vector<int>& cols, size_t row,
                        const VarsPtr& space) {
    if (row == m.size()) return Poly::constant(space, Rat(1));
    Poly acc(space);
    int sign = 1;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        if (cols[ci] < 0) continue;
        int col = cols[ci];
        const Poly& entry = m[row][static_cast<size_t>(col)];
        if (!entry.is_zero()) {
            cols[ci] = -1;
            Poly sub = det_laplace(m, cols, row + 1, space);
            cols[ci] = col;
            Poly term = entry * sub;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    return acc;
}

inline Poly sylvester_resultant(const Poly& a, const Poly& b, size_t var) {
    int m = a.degree_in(var), n = b.degree_in(var);
    VarsPtr space = a.vars_ptr();
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly(space)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            mat[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
                a.coeff_of(var, static_cast<uint32_t>(m - k));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            mat[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] =
                b.coeff_of(var, static_cast<uint32_t>(n - k));
    std::vector<int> cols(size);
    for (size_t i = 0; i < size; ++i) cols[i] = static_cast<int>(i);
    return det_laplace(mat, cols, 0, space);
}

// Seeded random polynomial with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, const VarsPtr& space, int max_deg, int nterms) {
    std::uniform_int_distribution<int> cdist(-6, 6);
    std::uniform_int_distribution<int> edist(0, max_deg);
    Poly p(space);
    for (int i = 0; i < nterms; ++i) {
        Poly::Exp e(space->size(), 0);
        int budget = max_deg;
        for (size_t v = 0; v < space->size(); ++v) {
            int d = std::min(budget, edist(rng));
            e[v] = static_cast<uint32_t>(d);
            budget -= d;
        }
        int c = cdist(rng);
        if (c != 0) p.add_term(e, Rat(c));
    }
    return p;
}

}  // namespace jacinf::testing
