#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <map>
#include <optional>
#include <vector>

#include "realnf/bipoly.hpp"
#include "realnf/rational.hpp"

namespace oracles {

using realnf::BiPoly;
using realnf::Int;
using realnf::Mon;
using realnf::Rat;

// Dense-grid polynomial product, used to cross-check sparse arithmetic and
// substitution: a completely separate expansion path.
inline std::vector<std::vector<Rat>> to_grid(const BiPoly<Rat>& f, int n) {
    std::vector<std::vector<Rat>> g(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (const auto& [m, v] : f.terms) g.at(m.first).at(m.second) = v;
    return g;
}

inline BiPoly<Rat> grid_mul(const BiPoly<Rat>& a, const BiPoly<Rat>& b) {
    int n = a.total_degree() + b.total_degree() + 1;
    auto ga = to_grid(a, n), gb = to_grid(b, n);
    std::vector<std::vector<Rat>> gc(2 * n + 2, std::vector<Rat>(2 * n + 2, Rat(0)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (ga[i][j] == 0) continue;
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l)
                    if (gb[k][l] != 0) gc[i + k][j + l] += ga[i][j] * gb[k][l];
        }
    BiPoly<Rat> r;
    for (size_t i = 0; i < gc.size(); ++i)
        for (size_t j = 0; j < gc.size(); ++j)
            if (gc[i][j] != 0) r.terms[{(int)i, (int)j}] = gc[i][j];
    return r;
}

// substitution by brute-force power accumulation on the grid representation
inline BiPoly<Rat> grid_substitute(const BiPoly<Rat>& f, const BiPoly<Rat>& xi,
                                   const BiPoly<Rat>& yi) {
    BiPoly<Rat> out;
    for (const auto& [m, v] : f.terms) {
        BiPoly<Rat> t = BiPoly<Rat>::monomial(0, 0, v);
        for (int i = 0; i < m.first; ++i) t = grid_mul(t, xi);
        for (int j = 0; j < m.second; ++j) t = grid_mul(t, yi);
        out = out + t;
    }
    return out;
}

// Brute-force Milnor number: dimension of Q[x,y]/(f_x, f_y, m^cap) by monomial
// linear algebra, with a stabilization check between cap and cap+1.
inline std::optional<int> truncated_quotient_dim(const BiPoly<Rat>& f, int cap) {
    BiPoly<Rat> fx = f.derivative_x(), fy = f.derivative_y();
    if (fx.is_zero() || fy.is_zero()) return std::nullopt;
    auto dim_at = [&](int N) {
        // monomials of total degree < N
        std::map<Mon, int> index;
        std::vector<Mon> mons;
        for (int d = 0; d < N; ++d)
            for (int i = 0; i <= d; ++i) {
                Mon m{i, d - i};
                index[m] = static_cast<int>(mons.size());
                mons.push_back(m);
            }
        std::vector<std::vector<Rat>> rows;
        for (const BiPoly<Rat>* g : {&fx, &fy}) {
            int gd = g->low_degree();
            for (int d = 0; d + gd < N; ++d)
                for (int i = 0; i <= d; ++i) {
                    std::vector<Rat> row(mons.size(), Rat(0));
                    for (const auto& [m, v] : g->terms) {
                        int a = m.first + i, b = m.second + (d - i);
                        if (a + b < N) row[index[{a, b}]] = v;
                    }
                    rows.push_back(std::move(row));
                }
        }
        // rank by Gaussian elimination
        size_t rank = 0, cols = mons.size();
        for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
            size_t sel = rank;
            while (sel < rows.size() && rows[sel][c] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[sel], rows[rank]);
            for (size_t r2 = 0; r2 < rows.size(); ++r2) {
                if (r2 == rank || rows[r2][c] == 0) continue;
                Rat fmul = rows[r2][c] / rows[rank][c];
                for (size_t c2 = c; c2 < cols; ++c2) rows[r2][c2] -= fmul * rows[rank][c2];
            }
            ++rank;
        }
        return static_cast<int>(cols - rank);
    };
    int a = dim_at(cap), b = dim_at(cap + 1);
    if (a != b) return std::nullopt;  // not stabilized: treat as infinite at this cap
    return a;
}

}  // namespace oracles
