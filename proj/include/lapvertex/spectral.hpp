#pragma once

#include <string_view>
#include <vector>

#include "lapvertex/graph.hpp"

namespace lapvertex {

/// Eigenvalues ascending; column j of `vectors` (row-major, order × order) pairs with eigenvalue j.
struct SpectralDecomposition {
    int order = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vectors;
    int sweeps = 0;

    double vector(int row, int col) const { return vectors[static_cast<std::size_t>(row) * order + col]; }
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeThreshold = 1e-14;

/// Cyclic Jacobi. Converged once the off-diagonal Frobenius norm is at most 1e-14·‖M‖_F.
/// Throws NoConvergence after kJacobiMaxSweeps sweeps.
SpectralDecomposition eig_sym(const SymMatrix& m);

/// U·|Λ|·Uᵀ, symmetrized exactly.
SymMatrix matrix_abs(const SymMatrix& m);
SymMatrix matrix_abs(const SpectralDecomposition& decomposition);

/// Atom of the spectral measure of M at a vertex. Atoms are merged when eigenvalues coincide
/// within 1e-9·max(1, |λ|), so weights are invariant to the eigenbasis chosen in an eigenspace.
struct SpectralAtom {
    double eigenvalue;
    double weight;
};

struct VertexSpectralDistribution {
    std::vector<SpectralAtom> atoms;

    double total_weight() const;
    /// Σ weight·eigenvalue^k
    double moment(int k) const;
};

enum class EnergyMethod { Spectral, Coulson, ClosedForm };

std::string_view to_string(EnergyMethod method) noexcept;

struct VertexEnergyReport {
    MatrixKind kind = MatrixKind::Laplacian;
    EnergyMethod method = EnergyMethod::Spectral;
    std::vector<double> energies;
    double total = 0.0;
    /// Per-vertex method residual (Coulson: accumulated imaginary part); empty for spectral.
    std::vector<double> residuals;
};

/// Σ_j U_vj² |λ_j − baseline| for every vertex v.
std::vector<double> vertex_energies(const SpectralDecomposition& decomposition, double baseline);

double vertex_energy(const Graph& g, MatrixKind kind, Vertex v);
VertexSpectralDistribution vertex_distribution(const Graph& g, MatrixKind kind, Vertex v);
VertexSpectralDistribution vertex_distribution(const SpectralDecomposition& decomposition, Vertex v);
VertexEnergyReport energy_report(const Graph& g, MatrixKind kind);

/// [M^k]_vv for k in 1..3 from degrees, neighbor degrees and triangle counts only.
double moment(const Graph& g, MatrixKind kind, Vertex v, int k);
/// Σ_j U_vj² λ_j^k from a decomposition; the spectral side of the moment cross-check.
double spectral_moment(const SpectralDecomposition& decomposition, Vertex v, int k);

}  // namespace lapvertex
