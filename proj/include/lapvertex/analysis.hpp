#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lapvertex/geometry.hpp"
#include "lapvertex/graph.hpp"
#include "lapvertex/spectral.hpp"

namespace lapvertex {

inline constexpr double kCertificateTolerance = 1e-9;
/// Spectrum-membership tolerance for the Laplacian lower-bound equality predicate.
inline constexpr double kSpectrumMatchTolerance = 1e-8;

enum class TheoremId {
    CsAgmProduct,          // 𝓔(v)𝓔(w) ≥ [M − bI]_vw²
    CsAgmSum,              // 𝓔(v) + 𝓔(w) ≥ 2|[M − bI]_vw|
    McClelland,            // L𝓔(v) ≤ √(d + (2m/n − d)²)
    LaplacianLower,        // L𝓔(v) ≥ ((2m/n − d)² + d)/n′
    NleUpper,              // 𝓛𝓔(v) ≤ √((1/d)Σ 1/d_w)
    NleLower,              // 𝓛𝓔(v) ≥ (1/d)Σ 1/d_w
    NleDegreeLower,        // 𝓛𝓔(v) ≥ 1/d_max
    NleDegreeUpper,        // 𝓛𝓔(v) ≤ 1/√d_min
    RandicLaplacian,       // L𝓔(G) ≥ 2R_{−1/2}
    RandicNormalized,      // 𝓛𝓔(G) ≥ 2R_{−1}
    LaplacianChainInner,   // L𝓔(G) ≤ Σ√(d + (d − 2m/n)²)
    LaplacianChainOuter,   // Σ√(…) ≤ √(nΣ(…))
    NormalizedChainInner,  // 𝓛𝓔(G) ≤ Σ√((1/d)Σ 1/d_w)
    NormalizedChainOuter,  // Σ√(…) ≤ √(2nR_{−1})
    CheegerVertex,         // 𝓛𝓔(v) ≤ d/2m + α(1 − d/2m)
    CheegerTotal,          // 𝓛𝓔(G) ≤ 1 + α(n − 1)
    CurvatureVertex,       // 𝓛𝓔(v) ≤ 1 − k(1 − d/2m)
    CurvatureTotal,        // 𝓛𝓔(G) ≤ n − k(n − 1)
    CheegerSpectral,       // smallest nonzero 𝓛-eigenvalue ≥ 1 − √(1 − h²)
    DualCheegerSpectral,   // largest 𝓛-eigenvalue ≤ 1 + √(1 − (1 − h̄)²)
    OllivierGapLower,      // smallest nonzero 𝓛-eigenvalue ≥ k
    OllivierGapUpper,      // largest 𝓛-eigenvalue ≤ 2 − k
};

std::string_view to_string(TheoremId id) noexcept;

enum class Scope { Graph, Vertex, Edge };
std::string_view to_string(Scope scope) noexcept;

/// Direction of the inequality as written: lhs ≤ rhs or lhs ≥ rhs.
enum class Relation { LessEqual, GreaterEqual };
std::string_view to_string(Relation relation) noexcept;

struct InequalityCertificate {
    TheoremId theorem = TheoremId::McClelland;
    Scope scope = Scope::Graph;
    Vertex v = -1;
    Vertex w = -1;
    std::optional<MatrixKind> kind;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::LessEqual;
    /// Oriented so that slack ≥ 0 means the inequality holds.
    double slack = 0.0;
    std::optional<bool> equality_predicate;
    bool passed = true;
};

/// Fills slack and passed from lhs, rhs and relation.
InequalityCertificate make_certificate(TheoremId theorem, Scope scope, double lhs, double rhs, Relation relation,
                                       double tolerance = kCertificateTolerance);

struct RandicValues {
    double r_half = 0.0;  // Σ_edges (d_i d_j)^{-1/2}
    double r_one = 0.0;   // Σ_edges (d_i d_j)^{-1}
};

RandicValues randic(const Graph& g);

/// v is adjacent to every other vertex and every other vertex is a leaf.
bool is_star_center(const Graph& g, Vertex v);
/// BFS 2-colouring, then |E| = |A|·|B|.
bool is_complete_bipartite(const Graph& g);

using Certificates = std::vector<InequalityCertificate>;

/// Product and sum form for every edge.
Certificates check_cs_agm(const Graph& g, MatrixKind kind, double tolerance = kCertificateTolerance);
Certificates check_mcclelland(const Graph& g, double tolerance = kCertificateTolerance);
Certificates check_laplacian_lower(const Graph& g, double tolerance = kCertificateTolerance);
/// Upper, lower, degree-lower and degree-upper certificates for every vertex.
Certificates check_nle_bounds(const Graph& g, double tolerance = kCertificateTolerance);
Certificates check_randic_theorems(const Graph& g, double tolerance = kCertificateTolerance);

struct GeometricBounds {
    CheegerResult cheeger;
    DualCheegerResult dual_cheeger;
    Rational k_min;
    double alpha = 0.0;
    Certificates certificates;
};

/// Cheeger and curvature bounds per vertex plus both totals. TooLarge above the dual Cheeger cap.
GeometricBounds check_geometric_bounds(const Graph& g, double tolerance = kCertificateTolerance);
/// Cheeger, dual Cheeger and Ollivier spectral bounds on the 𝓛 spectrum, from precomputed constants.
Certificates check_spectral_sandwiches(const Graph& g, const GeometricBounds& bounds,
                                       double tolerance = kCertificateTolerance);

/// energy ≤ middle ≤ outer, where middle sums per-vertex bounds and outer is its Cauchy–Schwarz bound.
struct BoundChain {
    MatrixKind kind = MatrixKind::Laplacian;
    double energy = 0.0;
    double middle = 0.0;
    double outer = 0.0;
    Certificates certificates;
};

/// Laplacian chain then normalized chain.
std::vector<BoundChain> bound_improvement_report(const Graph& g, double tolerance = kCertificateTolerance);

/// 𝓔(v)/d_v + 𝓔(w)/d_w. NotAnEdge unless v ∼ w.
double edge_energy(const Graph& g, MatrixKind kind, Vertex v, Vertex w);

struct ConjectureVertex {
    double adjacency_energy = 0.0;  // 𝓔(v)
    double normalized_energy = 0.0; // 𝓛𝓔(v)
    double lower = 0.0;             // d_min·𝓛𝓔(v)
    double upper = 0.0;             // d_max·𝓛𝓔(v)
};

struct ConjectureScanRecord {
    int n = 0;
    int m = 0;
    std::uint64_t fingerprint = 0;
    std::optional<std::uint64_t> seed;
    std::vector<Edge> edges;
    std::vector<ConjectureVertex> vertices;
    /// min over v of min(𝓔 − d_min𝓛𝓔, d_max𝓛𝓔 − 𝓔); negative beyond tolerance means violated.
    double margin = 0.0;
    Vertex worst_vertex = 0;
    bool violated = false;
};

/// Recomputes the verdict from stored energies.
void apply_conjecture_verdict(ConjectureScanRecord& record, double tolerance = kCertificateTolerance);

ConjectureScanRecord conjecture_record(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt,
                                       double tolerance = kCertificateTolerance);

}  // namespace lapvertex
