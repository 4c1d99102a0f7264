#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lapvertex/graph.hpp"

namespace lapvertex {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

inline constexpr int kCheegerMaxVertices = 24;
inline constexpr int kDualCheegerMaxVertices = 15;

struct CheegerResult {
    Rational value;
    /// Vertex set U attaining |E(U, V∖U)| / min(vol U, vol V∖U); always contains vertex 0.
    std::vector<Vertex> witness;
};

struct DualCheegerResult {
    Rational value;
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

/// Exact minimum over the 2^(n−1) − 1 cuts (subsets containing vertex 0). TooLarge above 24 vertices.
CheegerResult cheeger(const Graph& g);
/// Exact maximum of 2|E(V₁,V₂)| / (vol V₁ + vol V₂) over disjoint nonempty V₁, V₂.
/// TooLarge above 15 vertices.
DualCheegerResult dual_cheeger(const Graph& g);

/// |E(U, V∖U)| / min(vol U, vol V∖U) for a nonempty proper subset.
Rational cheeger_quotient(const Graph& g, const std::vector<Vertex>& subset);
Rational dual_cheeger_quotient(const Graph& g, const std::vector<Vertex>& first, const std::vector<Vertex>& second);

/// All-pairs hop distances, row-major n × n.
std::vector<int> shortest_path_dist(const Graph& g);

/// Exact W₁ between the uniform neighbor measures of v and w.
Rational wasserstein1(const Graph& g, Vertex v, Vertex w);
Rational wasserstein1(const Graph& g, const std::vector<int>& distances, Vertex v, Vertex w);

struct EdgeCurvature {
    Vertex v;
    Vertex w;
    Rational w1;
    Rational kappa;
};

struct CurvatureReport {
    std::vector<EdgeCurvature> edges;
    Rational k_min;
};

/// κ(v, w) = 1 − W₁(m_v, m_w) on every edge, in edge order.
CurvatureReport ollivier_ricci(const Graph& g);

}  // namespace lapvertex
