#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "brickwall/engine.hpp"
#include "brickwall/joints.hpp"
#include "brickwall/spectral.hpp"

namespace oracle {

using brickwall::rational;
using brickwall::rational_matrix;

// Rasterizes the pattern into unit cells and scans unit vertical edges.
inline std::vector<brickwall::joint> raster_joints(const brickwall::pattern& p, bool interior)
{
    std::set<std::pair<std::int64_t, std::int64_t>> cells;
    std::map<std::int64_t, std::set<std::int64_t>> unit_edges; // x -> bottom y of unit edge
    for (const auto& b : p.bricks) {
        const auto& t = p.types[b.type];
        for (std::int64_t i = 0; i < t.width; ++i)
            for (std::int64_t j = 0; j < t.height; ++j)
                cells.insert({b.x + i, b.y + j});
        for (std::int64_t j = 0; j < t.height; ++j) {
            unit_edges[b.x].insert(b.y + j);
            unit_edges[b.x + t.width].insert(b.y + j);
        }
    }
    std::vector<brickwall::joint> out;
    for (const auto& [x, ys] : unit_edges) {
        std::vector<std::int64_t> kept;
        for (auto y : ys)
            if (!interior || (cells.count({x - 1, y}) && cells.count({x, y})))
                kept.push_back(y);
        for (std::size_t i = 0; i < kept.size();) {
            std::size_t j = i;
            while (j + 1 < kept.size() && kept[j + 1] == kept[j] + 1)
                ++j;
            out.push_back({x, kept[i], kept[j] + 1});
            i = j + 1;
        }
    }
    return out;
}

inline std::int64_t raster_vmax(const brickwall::pattern& p, bool interior = false)
{
    std::int64_t best = 0;
    for (const auto& j : raster_joints(p, interior))
        best = std::max(best, j.length());
    return best;
}

// Binary digit sum parity by repeated division.
inline int thue_morse(std::uint64_t i)
{
    int s = 0;
    while (i) {
        s += static_cast<int>(i % 2);
        i /= 2;
    }
    return s % 2;
}

// Product by n - 1 plain multiplications.
inline rational_matrix repeated_product(const rational_matrix& m, unsigned n)
{
    const std::size_t k = m.size();
    rational_matrix acc(k, std::vector<rational>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        acc[i][i] = 1;
    for (unsigned step = 0; step < n; ++step) {
        rational_matrix next(k, std::vector<rational>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l)
                    next[i][j] += acc[i][l] * m[l][j];
        acc = next;
    }
    return acc;
}

// Solves u (M - lambda I) = 0 with sum(u) = 1 by exact Gaussian elimination.
// Assumes the eigenvalue is simple.
inline std::vector<rational> left_eigenvector(const rational_matrix& m, const rational& lambda)
{
    const std::size_t n = m.size();
    // Unknowns u_0..u_{n-1}; equations: column j of (M - lambda I), plus the
    // normalization row. One column equation is redundant; drop the last.
    std::vector<std::vector<rational>> a;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<rational> row(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = m[i][j] - (i == j ? lambda : rational(0));
        a.push_back(row);
    }
    std::vector<rational> norm(n + 1, 1);
    a.push_back(norm);

    for (std::size_t col = 0, r = 0; col < n && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0)
                continue;
            rational f = a[i][col] / a[r][col];
            for (std::size_t k = col; k <= n; ++k)
                a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    std::vector<rational> u(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a[i][c] != 0) {
                u[c] = a[i][n] / a[i][c];
                break;
            }
        }
    }
    return u;
}

}
