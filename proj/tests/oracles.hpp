#pragma once

// Slow, independent re-implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lapvertex/geometry.hpp"
#include "lapvertex/graph.hpp"

namespace oracle {

using lapvertex::Graph;
using lapvertex::Rational;
using lapvertex::Vertex;

/// Minimum over every nonempty proper subset, with no complement symmetry.
inline Rational cheeger(const Graph& g) {
    const int n = g.n();
    const std::int64_t total = 2 * static_cast<std::int64_t>(g.m());
    bool first = true;
    Rational best;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::int64_t vol = 0, cut = 0;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1u) vol += g.degree(v);
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1u) != (mask >> v & 1u)) ++cut;
        const Rational q(cut, std::min(vol, total - vol));
        if (first || q < best) best = q;
        first = false;
    }
    return best;
}

/// Base-3 counter over assignments to V₁ / V₂ / neither.
inline Rational dual_cheeger(const Graph& g) {
    const int n = g.n();
    std::vector<int> label(n, 0);
    Rational best(0);
    while (true) {
        int i = 0;
        while (i < n && label[i] == 2) label[i++] = 0;
        if (i == n) break;
        ++label[i];
        std::int64_t vol = 0, crossing = 0;
        bool has1 = false, has2 = false;
        for (Vertex v = 0; v < n; ++v) {
            has1 |= label[v] == 1;
            has2 |= label[v] == 2;
            if (label[v] != 0) vol += g.degree(v);
        }
        if (!has1 || !has2) continue;
        for (auto [u, v] : g.edges())
            if (label[u] * label[v] == 2) ++crossing;
        best = std::max(best, Rational(2 * crossing, vol));
    }
    return best;
}

/// Floyd–Warshall distances.
inline std::vector<int> distances(const Graph& g) {
    const int n = g.n();
    const int inf = n + 1;
    std::vector<int> d(static_cast<std::size_t>(n) * n, inf);
    for (Vertex v = 0; v < n; ++v) d[v * n + v] = 0;
    for (auto [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    return d;
}

/// Exact W₁ by enumerating every integer transport plan between the measures scaled by d_v·d_w.
/// The transportation polytope has integral vertices, so this is the LP optimum.
inline Rational wasserstein1(const Graph& g, Vertex v, Vertex w) {
    const auto d = distances(g);
    const auto& rows = g.neighbors(v);
    const auto& cols = g.neighbors(w);
    const int r = static_cast<int>(rows.size()), c = static_cast<int>(cols.size());
    const std::int64_t supply = g.degree(w), demand = g.degree(v);
    std::vector<std::int64_t> remaining(c, demand);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();

    // Fill the plan row by row, cell by cell.
    std::function<void(int, int, std::int64_t, std::int64_t)> place = [&](int i, int j, std::int64_t left,
                                                                          std::int64_t cost) {
        if (i == r) {
            best = std::min(best, cost);
            return;
        }
        if (j == c - 1) {
            if (left > remaining[j]) return;
            remaining[j] -= left;
            place(i + 1, 0, supply, cost + left * d[rows[i] * g.n() + cols[j]]);
            remaining[j] += left;
            return;
        }
        for (std::int64_t x = 0; x <= std::min(left, remaining[j]); ++x) {
            remaining[j] -= x;
            place(i, j + 1, left - x, cost + x * d[rows[i] * g.n() + cols[j]]);
            remaining[j] += x;
        }
    };
    place(0, 0, supply, 0);
    return Rational(best, supply * demand);
}

}  // namespace oracle
