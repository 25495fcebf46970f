#pragma once

#include "mixspec/int_matrix.hpp"
#include "mixspec/mixed_graph.hpp"

// Independent brute-force oracles used only by tests. Kept free of the
// library's Berkowitz/Bareiss code paths on purpose.
namespace oracle {

// Laplace cofactor expansion along the first row.
inline mpz_class det_cofactor(const mixspec::IntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        const mpz_class sub = det_cofactor(m.minor_matrix(0, j));
        acc += (j % 2 == 0 ? 1 : -1) * m.at(0, j) * sub;
    }
    return acc;
}

// det(xI - M) by cofactor expansion over polynomial entries.
inline mixspec::IntPoly charpoly_cofactor(const mixspec::IntMatrix& m) {
    using mixspec::IntPoly;
    const int n = m.rows();
    std::vector<std::vector<IntPoly>> entries(static_cast<size_t>(n),
                                              std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly p = IntPoly::constant(-m.at(i, j));
            if (i == j) p = p + IntPoly::monomial(1);
            entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
        }
    auto det = [](auto&& self, const std::vector<std::vector<IntPoly>>& a) -> IntPoly {
        const size_t k = a.size();
        if (k == 0) return IntPoly::constant(1);
        if (k == 1) return a[0][0];
        IntPoly acc;
        for (size_t j = 0; j < k; ++j) {
            if (a[0][j].is_zero()) continue;
            std::vector<std::vector<IntPoly>> minor(k - 1, std::vector<IntPoly>(k - 1));
            for (size_t r = 1; r < k; ++r)
                for (size_t c = 0, cc = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor[r - 1][cc++] = a[r][c];
                }
            IntPoly term = a[0][j] * self(self, minor);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(det, entries);
}

// Naive recount of a degree profile over full incidence scans.
inline mixspec::DegreeProfile recount_degrees(const mixspec::MixedGraph& g, mixspec::Vertex v) {
    mixspec::DegreeProfile p;
    for (const auto& [key, m] : g.edges())
        for (int rep = 0; rep < m; ++rep) {
            if (key.first == v) ++p.d;
            if (key.second == v) ++p.d;
        }
    for (const auto& [w, m] : g.loops())
        if (w == v) {
            p.l += m;
            p.d += 2 * m;
        }
    for (const auto& [key, m] : g.arcs())
        for (int rep = 0; rep < m; ++rep) {
            if (key.first == v) ++p.dplus;
            if (key.second == v) ++p.dminus;
        }
    for (const auto& [w, m] : g.dloops())
        if (w == v) {
            p.dplus += m;
            p.dminus += m;
        }
    return p;
}

}  // namespace oracle
