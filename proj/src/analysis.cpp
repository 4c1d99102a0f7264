#include "lapvertex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace lapvertex {

std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
        case TheoremId::CsAgmProduct: return "cs_agm_product";
        case TheoremId::CsAgmSum: return "cs_agm_sum";
        case TheoremId::McClelland: return "mcclelland";
        case TheoremId::LaplacianLower: return "laplacian_lower";
        case TheoremId::NleUpper: return "nle_upper";
        case TheoremId::NleLower: return "nle_lower";
        case TheoremId::NleDegreeLower: return "nle_degree_lower";
        case TheoremId::NleDegreeUpper: return "nle_degree_upper";
        case TheoremId::RandicLaplacian: return "randic_laplacian";
        case TheoremId::RandicNormalized: return "randic_normalized";
        case TheoremId::LaplacianChainInner: return "laplacian_chain_inner";
        case TheoremId::LaplacianChainOuter: return "laplacian_chain_outer";
        case TheoremId::NormalizedChainInner: return "normalized_chain_inner";
        case TheoremId::NormalizedChainOuter: return "normalized_chain_outer";
        case TheoremId::CheegerVertex: return "cheeger_vertex";
        case TheoremId::CheegerTotal: return "cheeger_total";
        case TheoremId::CurvatureVertex: return "curvature_vertex";
        case TheoremId::CurvatureTotal: return "curvature_total";
        case TheoremId::CheegerSpectral: return "cheeger_spectral";
        case TheoremId::DualCheegerSpectral: return "dual_cheeger_spectral";
        case TheoremId::OllivierGapLower: return "ollivier_gap_lower";
        case TheoremId::OllivierGapUpper: return "ollivier_gap_upper";
    }
    return "unknown";
}

std::string_view to_string(Scope scope) noexcept {
    switch (scope) {
        case Scope::Graph: return "graph";
        case Scope::Vertex: return "vertex";
        case Scope::Edge: return "edge";
    }
    return "unknown";
}

std::string_view to_string(Relation relation) noexcept {
    return relation == Relation::LessEqual ? "<=" : ">=";
}

InequalityCertificate make_certificate(TheoremId theorem, Scope scope, double lhs, double rhs, Relation relation,
                                       double tolerance) {
    InequalityCertificate c;
    c.theorem = theorem;
    c.scope = scope;
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = relation;
    c.slack = relation == Relation::LessEqual ? rhs - lhs : lhs - rhs;
    c.passed = c.slack >= -tolerance;
    return c;
}

namespace {

InequalityCertificate vertex_certificate(TheoremId theorem, Vertex v, MatrixKind kind, double lhs, double rhs,
                                         Relation relation, double tolerance) {
    auto c = make_certificate(theorem, Scope::Vertex, lhs, rhs, relation, tolerance);
    c.v = v;
    c.kind = kind;
    return c;
}

InequalityCertificate graph_certificate(TheoremId theorem, MatrixKind kind, double lhs, double rhs,
                                        Relation relation, double tolerance) {
    auto c = make_certificate(theorem, Scope::Graph, lhs, rhs, relation, tolerance);
    c.kind = kind;
    return c;
}

/// (1/d_v) Σ_{w∼v} 1/d_w
double inverse_degree_mean(const Graph& g, Vertex v) {
    double sum = 0.0;
    for (Vertex w : g.neighbors(v)) sum += 1.0 / g.degree(w);
    return sum / g.degree(v);
}

double sum(const std::vector<double>& values) { return std::accumulate(values.begin(), values.end(), 0.0); }

}  // namespace

RandicValues randic(const Graph& g) {
    RandicValues r;
    for (auto [u, v] : g.edges()) {
        const double product = static_cast<double>(g.degree(u)) * g.degree(v);
        r.r_half += 1.0 / std::sqrt(product);
        r.r_one += 1.0 / product;
    }
    return r;
}

bool is_star_center(const Graph& g, Vertex v) {
    if (g.degree(v) != g.n() - 1) return false;
    for (Vertex w = 0; w < g.n(); ++w)
        if (w != v && g.degree(w) != 1) return false;
    return true;
}

bool is_complete_bipartite(const Graph& g) {
    if (g.n() < 2) return false;
    std::vector<int> colour(g.n(), -1);
    std::queue<Vertex> frontier;
    colour[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (colour[w] < 0) {
                colour[w] = 1 - colour[u];
                frontier.push(w);
            } else if (colour[w] == colour[u]) {
                return false;
            }
        }
    }
    const auto a = std::count(colour.begin(), colour.end(), 0);
    return static_cast<long long>(g.m()) == a * (g.n() - a);
}

Certificates check_cs_agm(const Graph& g, MatrixKind kind, double tolerance) {
    const auto energies = energy_report(g, kind).energies;
    const SymMatrix m = matrix(g, kind);
    Certificates out;
    for (auto [v, w] : g.edges()) {
        const double entry = m(v, w);
        for (auto theorem : {TheoremId::CsAgmProduct, TheoremId::CsAgmSum}) {
            const bool product = theorem == TheoremId::CsAgmProduct;
            const double lhs = product ? energies[v] * energies[w] : energies[v] + energies[w];
            const double rhs = product ? entry * entry : 2.0 * std::abs(entry);
            auto c = make_certificate(theorem, Scope::Edge, lhs, rhs, Relation::GreaterEqual, tolerance);
            c.v = v;
            c.w = w;
            c.kind = kind;
            out.push_back(c);
        }
    }
    return out;
}

Certificates check_mcclelland(const Graph& g, double tolerance) {
    const auto energies = energy_report(g, MatrixKind::Laplacian).energies;
    const double mean = 2.0 * g.m() / g.n();
    Certificates out;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double d = g.degree(v);
        auto c = vertex_certificate(TheoremId::McClelland, v, MatrixKind::Laplacian, energies[v],
                                    std::sqrt(d + (mean - d) * (mean - d)), Relation::LessEqual, tolerance);
        c.equality_predicate = g.n() <= 2;
        out.push_back(c);
    }
    return out;
}

Certificates check_laplacian_lower(const Graph& g, double tolerance) {
    const auto decomposition = eig_sym(matrix(g, MatrixKind::Laplacian));
    const double mean = 2.0 * g.m() / g.n();
    const auto energies = vertex_energies(decomposition, mean);
    const double n_prime = std::max(mean, g.n() - mean);

    bool spectrum_matches = true;
    for (double lambda : decomposition.eigenvalues) {
        const bool hit = std::abs(lambda) <= kSpectrumMatchTolerance ||
                         std::abs(lambda - mean) <= kSpectrumMatchTolerance ||
                         std::abs(lambda - g.n()) <= kSpectrumMatchTolerance;
        spectrum_matches = spectrum_matches && hit;
    }

    Certificates out;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double d = g.degree(v);
        auto c = vertex_certificate(TheoremId::LaplacianLower, v, MatrixKind::Laplacian, energies[v],
                                    ((mean - d) * (mean - d) + d) / n_prime, Relation::GreaterEqual, tolerance);
        c.equality_predicate = spectrum_matches;
        out.push_back(c);
    }
    return out;
}

Certificates check_nle_bounds(const Graph& g, double tolerance) {
    const auto energies = energy_report(g, MatrixKind::NormalizedLaplacian).energies;
    const bool complete_bipartite = is_complete_bipartite(g);
    const double d_min = g.min_degree(), d_max = g.max_degree();
    Certificates out;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double mean = inverse_degree_mean(g, v);
        auto upper = vertex_certificate(TheoremId::NleUpper, v, MatrixKind::NormalizedLaplacian, energies[v],
                                        std::sqrt(mean), Relation::LessEqual, tolerance);
        upper.equality_predicate = is_star_center(g, v);
        auto lower = vertex_certificate(TheoremId::NleLower, v, MatrixKind::NormalizedLaplacian, energies[v], mean,
                                        Relation::GreaterEqual, tolerance);
        lower.equality_predicate = complete_bipartite;
        out.push_back(upper);
        out.push_back(lower);
        out.push_back(vertex_certificate(TheoremId::NleDegreeLower, v, MatrixKind::NormalizedLaplacian, energies[v],
                                         1.0 / d_max, Relation::GreaterEqual, tolerance));
        out.push_back(vertex_certificate(TheoremId::NleDegreeUpper, v, MatrixKind::NormalizedLaplacian, energies[v],
                                         1.0 / std::sqrt(d_min), Relation::LessEqual, tolerance));
    }
    return out;
}

Certificates check_randic_theorems(const Graph& g, double tolerance) {
    const RandicValues r = randic(g);
    const double laplacian = energy_report(g, MatrixKind::Laplacian).total;
    const double normalized = energy_report(g, MatrixKind::NormalizedLaplacian).total;
    return {
        graph_certificate(TheoremId::RandicLaplacian, MatrixKind::Laplacian, laplacian, 2.0 * r.r_half,
                          Relation::GreaterEqual, tolerance),
        graph_certificate(TheoremId::RandicNormalized, MatrixKind::NormalizedLaplacian, normalized, 2.0 * r.r_one,
                          Relation::GreaterEqual, tolerance),
    };
}

GeometricBounds check_geometric_bounds(const Graph& g, double tolerance) {
    if (g.n() > kDualCheegerMaxVertices) {
        throw Error(ErrorKind::TooLarge, "geometric bounds need the dual Cheeger constant (n <= " +
                                             std::to_string(kDualCheegerMaxVertices) + ")");
    }
    GeometricBounds out;
    out.cheeger = cheeger(g);
    out.dual_cheeger = dual_cheeger(g);
    out.k_min = ollivier_ricci(g).k_min;

    const double h = to_double(out.cheeger.value);
    const double h_bar = to_double(out.dual_cheeger.value);
    out.alpha = std::max(std::sqrt(std::max(0.0, 1.0 - h * h)),
                         std::sqrt(std::max(0.0, 1.0 - (1.0 - h_bar) * (1.0 - h_bar))));
    const double k = to_double(out.k_min);

    const auto energies = energy_report(g, MatrixKind::NormalizedLaplacian).energies;
    const double volume = 2.0 * g.m();
    const auto nl = MatrixKind::NormalizedLaplacian;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double share = g.degree(v) / volume;
        out.certificates.push_back(vertex_certificate(TheoremId::CheegerVertex, v, nl, energies[v],
                                                      share + out.alpha * (1.0 - share), Relation::LessEqual,
                                                      tolerance));
        out.certificates.push_back(vertex_certificate(TheoremId::CurvatureVertex, v, nl, energies[v],
                                                      1.0 - k * (1.0 - share), Relation::LessEqual, tolerance));
    }
    const double total = sum(energies);
    const double n = g.n();
    out.certificates.push_back(graph_certificate(TheoremId::CheegerTotal, nl, total, 1.0 + out.alpha * (n - 1.0),
                                                 Relation::LessEqual, tolerance));
    out.certificates.push_back(graph_certificate(TheoremId::CurvatureTotal, nl, total, n - k * (n - 1.0),
                                                 Relation::LessEqual, tolerance));
    return out;
}

Certificates check_spectral_sandwiches(const Graph& g, const GeometricBounds& bounds, double tolerance) {
    const auto nl = MatrixKind::NormalizedLaplacian;
    const auto eigenvalues = eig_sym(matrix(g, nl)).eigenvalues;
    const double gap = eigenvalues.at(1);  // 0 is simple for a connected graph
    const double top = eigenvalues.back();
    const double h = to_double(bounds.cheeger.value);
    const double h_bar = to_double(bounds.dual_cheeger.value);
    const double k = to_double(bounds.k_min);
    return {
        graph_certificate(TheoremId::CheegerSpectral, nl, gap, 1.0 - std::sqrt(std::max(0.0, 1.0 - h * h)),
                          Relation::GreaterEqual, tolerance),
        graph_certificate(TheoremId::DualCheegerSpectral, nl, top,
                          1.0 + std::sqrt(std::max(0.0, 1.0 - (1.0 - h_bar) * (1.0 - h_bar))), Relation::LessEqual,
                          tolerance),
        graph_certificate(TheoremId::OllivierGapLower, nl, gap, k, Relation::GreaterEqual, tolerance),
        graph_certificate(TheoremId::OllivierGapUpper, nl, top, 2.0 - k, Relation::LessEqual, tolerance),
    };
}

std::vector<BoundChain> bound_improvement_report(const Graph& g, double tolerance) {
    const double n = g.n();
    const double mean = 2.0 * g.m() / n;

    BoundChain laplacian;
    laplacian.kind = MatrixKind::Laplacian;
    laplacian.energy = energy_report(g, MatrixKind::Laplacian).total;
    double squares = 0.0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double d = g.degree(v);
        const double term = d + (d - mean) * (d - mean);
        laplacian.middle += std::sqrt(term);
        squares += term;
    }
    laplacian.outer = std::sqrt(n * squares);
    laplacian.certificates = {
        graph_certificate(TheoremId::LaplacianChainInner, MatrixKind::Laplacian, laplacian.energy, laplacian.middle,
                          Relation::LessEqual, tolerance),
        graph_certificate(TheoremId::LaplacianChainOuter, MatrixKind::Laplacian, laplacian.middle, laplacian.outer,
                          Relation::LessEqual, tolerance),
    };

    BoundChain normalized;
    normalized.kind = MatrixKind::NormalizedLaplacian;
    normalized.energy = energy_report(g, MatrixKind::NormalizedLaplacian).total;
    for (Vertex v = 0; v < g.n(); ++v) normalized.middle += std::sqrt(inverse_degree_mean(g, v));
    normalized.outer = std::sqrt(2.0 * n * randic(g).r_one);
    normalized.certificates = {
        graph_certificate(TheoremId::NormalizedChainInner, MatrixKind::NormalizedLaplacian, normalized.energy,
                          normalized.middle, Relation::LessEqual, tolerance),
        graph_certificate(TheoremId::NormalizedChainOuter, MatrixKind::NormalizedLaplacian, normalized.middle,
                          normalized.outer, Relation::LessEqual, tolerance),
    };
    return {laplacian, normalized};
}

double edge_energy(const Graph& g, MatrixKind kind, Vertex v, Vertex w) {
    if (!g.adjacent(v, w)) {
        throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(v) + ", " + std::to_string(w) + ") is not an edge");
    }
    const auto energies = energy_report(g, kind).energies;
    return energies[v] / g.degree(v) + energies[w] / g.degree(w);
}

void apply_conjecture_verdict(ConjectureScanRecord& record, double tolerance) {
    record.margin = std::numeric_limits<double>::infinity();
    record.worst_vertex = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(record.vertices.size()); ++v) {
        const auto& x = record.vertices[v];
        const double margin = std::min(x.adjacency_energy - x.lower, x.upper - x.adjacency_energy);
        if (margin < record.margin) {
            record.margin = margin;
            record.worst_vertex = v;
        }
    }
    record.violated = record.margin < -tolerance;
}

ConjectureScanRecord conjecture_record(const Graph& g, std::optional<std::uint64_t> seed, double tolerance) {
    ConjectureScanRecord record;
    record.n = g.n();
    record.m = g.m();
    record.fingerprint = fingerprint(g);
    record.seed = seed;
    record.edges = g.edges();
    const auto adjacency = energy_report(g, MatrixKind::Adjacency).energies;
    const auto normalized = energy_report(g, MatrixKind::NormalizedLaplacian).energies;
    const double d_min = g.min_degree(), d_max = g.max_degree();
    for (Vertex v = 0; v < g.n(); ++v) {
        record.vertices.push_back({adjacency[v], normalized[v], d_min * normalized[v], d_max * normalized[v]});
    }
    apply_conjecture_verdict(record, tolerance);
    return record;
}

}  // namespace lapvertex
