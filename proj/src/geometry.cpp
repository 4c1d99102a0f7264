#include "lapvertex/geometry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace lapvertex {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint32_t> masks(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        masks[u] |= 1u << v;
        masks[v] |= 1u << u;
    }
    return masks;
}

std::vector<Vertex> members(std::uint32_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

std::vector<char> membership(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<char> in(g.n(), 0);
    for (Vertex v : set) {
        g.degree(v);
        if (in[v]) throw Error(ErrorKind::BadParams, "vertex " + std::to_string(v) + " listed twice");
        in[v] = 1;
    }
    return in;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cheeger constants

Rational cheeger_quotient(const Graph& g, const std::vector<Vertex>& subset) {
    const auto in = membership(g, subset);
    if (subset.empty() || static_cast<int>(subset.size()) == g.n()) {
        throw Error(ErrorKind::BadParams, "Cheeger subset must be nonempty and proper");
    }
    std::int64_t cut = 0, vol = 0;
    for (Vertex v : subset) vol += g.degree(v);
    for (auto [u, v] : g.edges())
        if (in[u] != in[v]) ++cut;
    return Rational(cut, std::min<std::int64_t>(vol, 2 * static_cast<std::int64_t>(g.m()) - vol));
}

CheegerResult cheeger(const Graph& g) {
    const int n = g.n();
    if (n > kCheegerMaxVertices) {
        throw Error(ErrorKind::TooLarge, "exhaustive Cheeger search is capped at " +
                                             std::to_string(kCheegerMaxVertices) + " vertices");
    }
    if (n < 2) throw Error(ErrorKind::BadParams, "Cheeger constant needs at least two vertices");

    const auto adj = neighbor_masks(g);
    const std::int64_t total_volume = 2 * static_cast<std::int64_t>(g.m());
    const std::uint64_t count = 1ull << (n - 1);

    std::uint32_t set = 1u;  // Gray-code walk over subsets of {1..n-1}, vertex 0 always in
    std::int64_t vol = g.degree(0), cut = g.degree(0);
    std::int64_t best_cut = 0, best_den = 0;
    std::uint32_t best_set = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i > 0) {
            const int bit = std::countr_zero(i);  // gray(i) ^ gray(i-1) = 1 << bit
            const Vertex u = bit + 1;
            const std::uint32_t ubit = 1u << u;
            const std::int64_t du = g.degree(u);
            if (set & ubit) {
                set &= ~ubit;
                cut += 2 * std::popcount(adj[u] & set) - du;
                vol -= du;
            } else {
                cut += du - 2 * std::popcount(adj[u] & set);
                set |= ubit;
                vol += du;
            }
        }
        if (vol == total_volume) continue;  // U = V
        const std::int64_t den = std::min(vol, total_volume - vol);
        if (best_den == 0 || cut * best_den < best_cut * den) {
            best_cut = cut;
            best_den = den;
            best_set = set;
        }
    }
    return {Rational(best_cut, best_den), members(best_set)};
}

Rational dual_cheeger_quotient(const Graph& g, const std::vector<Vertex>& first, const std::vector<Vertex>& second) {
    const auto in1 = membership(g, first);
    const auto in2 = membership(g, second);
    if (first.empty() || second.empty()) throw Error(ErrorKind::BadParams, "dual Cheeger sets must be nonempty");
    std::int64_t vol = 0, crossing = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in1[v] && in2[v]) throw Error(ErrorKind::BadParams, "dual Cheeger sets must be disjoint");
        if (in1[v] || in2[v]) vol += g.degree(v);
    }
    for (auto [u, v] : g.edges())
        if ((in1[u] && in2[v]) || (in2[u] && in1[v])) ++crossing;
    return Rational(2 * crossing, vol);
}

DualCheegerResult dual_cheeger(const Graph& g) {
    const int n = g.n();
    if (n > kDualCheegerMaxVertices) {
        throw Error(ErrorKind::TooLarge, "exhaustive dual Cheeger search is capped at " +
                                             std::to_string(kDualCheegerMaxVertices) + " vertices");
    }
    if (n < 2) throw Error(ErrorKind::BadParams, "dual Cheeger constant needs at least two vertices");

    const auto adj = neighbor_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::int64_t> volume(1u << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        volume[s] = volume[s & (s - 1)] + g.degree(std::countr_zero(s));
    }

    std::int64_t best_num = -1, best_den = 1;
    std::uint32_t best1 = 0, best2 = 0;
    // (V₁, V₂) and (V₂, V₁) give the same quotient; keep the lowest vertex of V₁ ∪ V₂ in V₁.
    for (std::uint32_t s1 = 1; s1 <= full; ++s1) {
        const std::uint32_t low = s1 & (~s1 + 1);
        const std::uint32_t rest = full & ~s1 & ~(low | (low - 1));
        for (std::uint32_t s2 = rest; s2; s2 = (s2 - 1) & rest) {
            std::int64_t crossing = 0;
            for (std::uint32_t m = s2; m; m &= m - 1) crossing += std::popcount(adj[std::countr_zero(m)] & s1);
            const std::int64_t num = 2 * crossing, den = volume[s1] + volume[s2];
            if (num * best_den > best_num * den) {
                best_num = num;
                best_den = den;
                best1 = s1;
                best2 = s2;
            }
        }
    }
    return {Rational(best_num, best_den), members(best1), members(best2)};
}

// ---------------------------------------------------------------------------
// Distances and transport

std::vector<int> shortest_path_dist(const Graph& g) {
    const int n = g.n();
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    for (Vertex s = 0; s < n; ++s) {
        int* row = dist.data() + static_cast<std::size_t>(s) * n;
        std::queue<Vertex> frontier;
        row[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    frontier.push(w);
                }
            }
        }
    }
    return dist;
}

namespace {

/// Successive shortest paths with Johnson potentials; all arc costs start nonnegative.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes) : graph_(nodes), potential_(nodes, 0) {}

    void add_arc(int from, int to, std::int64_t capacity, std::int64_t cost) {
        graph_[from].push_back({to, static_cast<int>(graph_[to].size()), capacity, cost});
        graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0, -cost});
    }

    /// Returns (flow, cost) after pushing up to `limit` units from source to sink.
    std::pair<std::int64_t, std::int64_t> run(int source, int sink, std::int64_t limit) {
        constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
        const int nodes = static_cast<int>(graph_.size());
        std::int64_t flow = 0, cost = 0;
        while (flow < limit) {
            std::vector<std::int64_t> dist(nodes, inf);
            std::vector<int> prev_node(nodes, -1), prev_arc(nodes, -1);
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            dist[source] = 0;
            heap.push({0, source});
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d > dist[u]) continue;
                for (int i = 0; i < static_cast<int>(graph_[u].size()); ++i) {
                    const Arc& arc = graph_[u][i];
                    if (arc.capacity <= 0) continue;
                    const std::int64_t nd = d + arc.cost + potential_[u] - potential_[arc.to];
                    if (nd < dist[arc.to]) {
                        dist[arc.to] = nd;
                        prev_node[arc.to] = u;
                        prev_arc[arc.to] = i;
                        heap.push({nd, arc.to});
                    }
                }
            }
            if (dist[sink] == inf) break;
            for (int u = 0; u < nodes; ++u)
                if (dist[u] < inf) potential_[u] += dist[u];

            std::int64_t push = limit - flow;
            for (int u = sink; u != source; u = prev_node[u]) {
                push = std::min(push, graph_[prev_node[u]][prev_arc[u]].capacity);
            }
            for (int u = sink; u != source; u = prev_node[u]) {
                Arc& arc = graph_[prev_node[u]][prev_arc[u]];
                arc.capacity -= push;
                graph_[u][arc.reverse].capacity += push;
                cost += push * arc.cost;
            }
            flow += push;
        }
        return {flow, cost};
    }

private:
    struct Arc {
        int to;
        int reverse;
        std::int64_t capacity;
        std::int64_t cost;
    };
    std::vector<std::vector<Arc>> graph_;
    std::vector<std::int64_t> potential_;
};

}  // namespace

Rational wasserstein1(const Graph& g, const std::vector<int>& distances, Vertex v, Vertex w) {
    g.degree(v);
    g.degree(w);
    if (v == w) throw Error(ErrorKind::IdenticalVertices, "W1 needs two distinct vertices");
    const auto& from = g.neighbors(v);
    const auto& to = g.neighbors(w);
    const std::int64_t dv = g.degree(v), dw = g.degree(w);
    const int sx = static_cast<int>(from.size()), sy = static_cast<int>(to.size());

    // masses scaled by d_v·d_w: each source neighbor holds d_w, each target neighbor needs d_v
    const int source = 0, sink = 1 + sx + sy;
    MinCostFlow flow(sink + 1);
    for (int i = 0; i < sx; ++i) flow.add_arc(source, 1 + i, dw, 0);
    for (int j = 0; j < sy; ++j) flow.add_arc(1 + sx + j, sink, dv, 0);
    for (int i = 0; i < sx; ++i)
        for (int j = 0; j < sy; ++j)
            flow.add_arc(1 + i, 1 + sx + j, dv * dw, distances[static_cast<std::size_t>(from[i]) * g.n() + to[j]]);

    const auto [shipped, cost] = flow.run(source, sink, dv * dw);
    if (shipped != dv * dw) throw Error(ErrorKind::NoConvergence, "transport problem left mass unshipped");
    return Rational(cost, dv * dw);
}

Rational wasserstein1(const Graph& g, Vertex v, Vertex w) { return wasserstein1(g, shortest_path_dist(g), v, w); }

CurvatureReport ollivier_ricci(const Graph& g) {
    if (g.m() == 0) throw Error(ErrorKind::BadParams, "curvature needs at least one edge");
    const auto distances = shortest_path_dist(g);
    CurvatureReport report;
    for (auto [v, w] : g.edges()) {
        const Rational w1 = wasserstein1(g, distances, v, w);
        report.edges.push_back({v, w, w1, Rational(1) - w1});
    }
    report.k_min = report.edges.front().kappa;
    for (const auto& e : report.edges) report.k_min = std::min(report.k_min, e.kappa);
    return report;
}

}  // namespace lapvertex
