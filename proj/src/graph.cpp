#include "lapvertex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace lapvertex {

std::string_view to_string(MatrixKind kind) noexcept {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::NormalizedLaplacian: return "normalized";
    }
    return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
    if (name == "adjacency" || name == "A") return MatrixKind::Adjacency;
    if (name == "laplacian" || name == "L") return MatrixKind::Laplacian;
    if (name == "normalized" || name == "normalized_laplacian" || name == "NL") {
        return MatrixKind::NormalizedLaplacian;
    }
    throw Error(ErrorKind::BadParams, "unknown matrix kind '" + std::string(name) + "'");
}

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::Star: return "star";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete_bipartite";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Graph

Vertex Graph::check(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n_) + ")");
    }
    return v;
}

int Graph::min_degree() const noexcept { return *std::min_element(degrees_.begin(), degrees_.end()); }
int Graph::max_degree() const noexcept { return *std::max_element(degrees_.begin(), degrees_.end()); }

Graph build_graph(int n, std::span<const Edge> edges) {
    if (n < 1) throw Error(ErrorKind::BadParams, "vertex count must be >= 1");

    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                        ") outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end()) {
        throw Error(ErrorKind::DuplicateEdge,
                    "edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ") repeated");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(normalized);
    g.degrees_.assign(n, 0);
    g.adj_.assign(n, {});
    g.adj_matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges_) {
        ++g.degrees_[u];
        ++g.degrees_[v];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.adj_matrix_[static_cast<std::size_t>(u) * n + v] = 1;
        g.adj_matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());

    std::vector<char> seen(n, 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached != n) {
        throw Error(ErrorKind::Disconnected,
                    "only " + std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable from 0");
    }
    return g;
}

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix SymMatrix::from_rows(int order, std::vector<double> rows) {
    if (order < 0 || rows.size() != static_cast<std::size_t>(order) * order) {
        throw Error(ErrorKind::BadParams, "row data does not match matrix order");
    }
    for (int i = 0; i < order; ++i) {
        for (int j = i + 1; j < order; ++j) {
            if (rows[static_cast<std::size_t>(i) * order + j] != rows[static_cast<std::size_t>(j) * order + i]) {
                throw Error(ErrorKind::BadParams, "matrix is not exactly symmetric");
            }
        }
    }
    SymMatrix out;
    out.order_ = order;
    out.data_ = std::move(rows);
    return out;
}

SymMatrix SymMatrix::identity(int order) {
    SymMatrix out(order);
    for (int i = 0; i < order; ++i) out.set(i, i, 1.0);
    return out;
}

double SymMatrix::max_abs() const noexcept {
    double best = 0.0;
    for (double x : data_) best = std::max(best, std::abs(x));
    return best;
}

double SymMatrix::frobenius() const noexcept {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

double SymMatrix::trace() const noexcept {
    double sum = 0.0;
    for (int i = 0; i < order_; ++i) sum += (*this)(i, i);
    return sum;
}

SymMatrix SymMatrix::shifted(double shift) const {
    SymMatrix out = *this;
    for (int i = 0; i < order_; ++i) out.set(i, i, (*this)(i, i) - shift);
    return out;
}

// ---------------------------------------------------------------------------
// Matrices

SymMatrix matrix(const Graph& g, MatrixKind kind) {
    const int n = g.n();
    SymMatrix out(n);
    switch (kind) {
        case MatrixKind::Adjacency:
            for (auto [u, v] : g.edges()) out.set(u, v, 1.0);
            break;
        case MatrixKind::Laplacian:
            for (int i = 0; i < n; ++i) out.set(i, i, g.degree(i));
            for (auto [u, v] : g.edges()) out.set(u, v, -1.0);
            break;
        case MatrixKind::NormalizedLaplacian:
            if (g.m() == 0) throw Error(ErrorKind::BadParams, "normalized Laplacian needs at least one edge");
            for (int i = 0; i < n; ++i) out.set(i, i, 1.0);
            for (auto [u, v] : g.edges()) {
                out.set(u, v, -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
            }
            break;
    }
    return out;
}

double trace_baseline(const Graph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return 0.0;
        case MatrixKind::Laplacian: return 2.0 * g.m() / g.n();
        case MatrixKind::NormalizedLaplacian: return 1.0;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Graph from_edges(int n, std::vector<Edge> edges) { return build_graph(n, edges); }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::BadParams, what);
}

}  // namespace

Graph star(int n) {
    require(n >= 2, "star needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return from_edges(n, std::move(edges));
}

Graph path(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(n, std::move(edges));
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, std::move(edges));
}

Graph complete(int n) {
    require(n >= 2, "complete graph needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite needs both parts >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return from_edges(a + b, std::move(edges));
}

Graph generator(Family family, std::span<const int> params) {
    auto expect = [&](std::size_t count) {
        require(params.size() == count, std::string(to_string(family)) + " takes " + std::to_string(count) +
                                            " parameter(s), got " + std::to_string(params.size()));
    };
    switch (family) {
        case Family::Star: expect(1); return star(params[0]);
        case Family::Path: expect(1); return path(params[0]);
        case Family::Cycle: expect(1); return cycle(params[0]);
        case Family::Complete: expect(1); return complete(params[0]);
        case Family::CompleteBipartite: expect(2); return complete_bipartite(params[0], params[1]);
    }
    throw Error(ErrorKind::BadParams, "unknown family");
}

int triangle_count(const Graph& g, Vertex v) {
    const auto& nb = g.neighbors(v);
    int count = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (g.adjacent(nb[a], nb[b])) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

bool parse_int(std::string_view token, long long& out) {
    if (token.empty()) return false;
    std::size_t i = 0;
    bool negative = false;
    if (token[0] == '-' || token[0] == '+') {
        negative = token[0] == '-';
        i = 1;
        if (token.size() == 1) return false;
    }
    long long value = 0;
    for (; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') return false;
        value = value * 10 + (token[i] - '0');
        if (value > (1LL << 40)) return false;
    }
    out = negative ? -value : value;
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto tokens = split_ws(line);
        if (n < 0) {
            if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 1) {
                parse_fail(line_no, "expected a positive vertex count");
            }
            continue;
        }
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            parse_fail(line_no, "expected two integer vertex indices");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex index outside [0, " +
                                                        std::to_string(n) + ")");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) parse_fail(line_no, "missing vertex count");
    return build_graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::uint64_t fingerprint(const Graph& g) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : write_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Random graphs

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

Graph random_connected(int n, double p, std::uint64_t seed, int max_rejections) {
    if (n < 1) throw Error(ErrorKind::BadParams, "vertex count must be >= 1");
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParams, "edge probability must lie in (0, 1]");

    std::uint64_t state = seed;
    std::mt19937_64 rng(splitmix64(state));
    for (int attempt = 0; attempt <= max_rejections; ++attempt) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < p) edges.emplace_back(i, j);
            }
        }
        try {
            return build_graph(n, edges);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Disconnected) throw;
        }
    }
    throw Error(ErrorKind::GiveUp, "no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample after " +
                                       std::to_string(max_rejections) + " rejections");
}

}  // namespace lapvertex
