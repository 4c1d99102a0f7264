#pragma once

#include <cstdint>
#include <initializer_list>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapvertex/error.hpp"

namespace lapvertex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class MatrixKind { Adjacency, Laplacian, NormalizedLaplacian };

std::string_view to_string(MatrixKind kind) noexcept;
/// Accepts "adjacency", "laplacian", "normalized" (and "normalized_laplacian").
MatrixKind parse_matrix_kind(std::string_view name);

/// Simple connected undirected graph. Immutable once built; construct with build_graph().
class Graph {
public:
    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int degree(Vertex v) const { return degrees_.at(check(v)); }
    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(check(v)); }
    bool adjacent(Vertex u, Vertex v) const {
        return adj_matrix_[static_cast<std::size_t>(check(u)) * n_ + check(v)] != 0;
    }

    int min_degree() const noexcept;
    int max_degree() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);
    Graph() = default;

    Vertex check(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<unsigned char> adj_matrix_;
};

/// Dense symmetric matrix. `set` writes both mirrored entries, so symmetry is exact.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

    /// Builds from row-major data; throws BadParams unless data is exactly symmetric.
    static SymMatrix from_rows(int order, std::vector<double> rows);
    static SymMatrix identity(int order);

    int order() const noexcept { return order_; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, double value) {
        data_[index(i, j)] = value;
        data_[index(j, i)] = value;
    }
    const std::vector<double>& data() const noexcept { return data_; }

    double max_abs() const noexcept;
    double frobenius() const noexcept;
    double trace() const noexcept;
    /// this − shift·I
    SymMatrix shifted(double shift) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * order_ + j; }

    int order_ = 0;
    std::vector<double> data_;
};

/// Validates simplicity and connectivity. Pairs may come in either orientation.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, const std::vector<Edge>& edges) {
    return build_graph(n, std::span<const Edge>(edges));
}
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

SymMatrix matrix(const Graph& g, MatrixKind kind);

/// tr(M)/n from exact integer data: 0, 2m/n, or 1.
double trace_baseline(const Graph& g, MatrixKind kind);

enum class Family { Star, Path, Cycle, Complete, CompleteBipartite };

std::string_view to_string(Family family) noexcept;

/// Canonical orderings: star center is 0; path runs 0-1-...-(n-1); cycle closes (n-1)-0;
/// complete_bipartite(a, b) puts part A at 0..a-1 and part B at a..a+b-1.
Graph generator(Family family, std::span<const int> params);
Graph star(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

/// Number of triangles through v.
int triangle_count(const Graph& g, Vertex v);

/// Edge-list text: '#' comments, first data line is n, then one "u v" pair per line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

inline constexpr int kDefaultRejectionBudget = 10'000;

/// G(n, p) conditioned on connectivity by rejection sampling. Platform-independent for a
/// fixed seed (splitmix64-seeded mt19937_64 with manual uniform conversion).
Graph random_connected(int n, double p, std::uint64_t seed, int max_rejections = kDefaultRejectionBudget);

/// FNV-1a 64-bit hash of the canonical edge-list text.
std::uint64_t fingerprint(const Graph& g);

}  // namespace lapvertex
