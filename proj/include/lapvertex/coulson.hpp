#pragma once

#include <complex>
#include <vector>

#include "lapvertex/graph.hpp"
#include "lapvertex/spectral.hpp"

namespace lapvertex {

/// Monic characteristic polynomial det(xI − M); coefficients ascending, coefficients[degree] == 1.
struct CharPoly {
    std::vector<double> coefficients{1.0};

    int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    /// Plain Horner evaluation.
    std::complex<double> operator()(std::complex<double> z) const;
};

enum class CharPolyMethod {
    /// Trace recurrence; exact for small integer matrices, unstable once eigenvalue magnitudes spread.
    FaddeevLeVerrier,
    /// Householder tridiagonalization followed by the three-term determinant recurrence.
    Tridiagonal,
};

CharPoly char_poly(const SymMatrix& m, CharPolyMethod method = CharPolyMethod::FaddeevLeVerrier);

/// M with row and column i removed. Requires order >= 2.
SymMatrix principal_minor(const SymMatrix& m, int i);

/// Q(z)/P(z) evaluated without overflow (reversed Horner once |z| > 1).
std::complex<double> polynomial_ratio(const CharPoly& numerator, const CharPoly& denominator, std::complex<double> z);

/// Multiplicity of tr(M)/n as an eigenvalue of M, from the exact rank of an integer matrix
/// with the same nullity (A, n·L − 2m·I, or A for the normalized Laplacian).
int baseline_nullity(const Graph& g, MatrixKind kind);

/// Diagonal resolvent entry Ψ_v(z) = [(zI − (M − bI))⁻¹]_vv with b = tr(M)/n, held as the ratio
/// det(zI − (M̃_vv − bI)) / det(zI − (M − bI)).
struct ResolventDiag {
    CharPoly numerator;
    CharPoly denominator;
    Vertex vertex = 0;
    double baseline = 0.0;

    std::complex<double> operator()(std::complex<double> z) const {
        return polynomial_ratio(numerator, denominator, z);
    }
};

ResolventDiag resolvent(const Graph& g, MatrixKind kind, Vertex v);

/// Determinant form of Ψ_v(z). Throws NearPole when z lies within 1e-8 of a shifted eigenvalue.
std::complex<double> resolvent_diag(const Graph& g, MatrixKind kind, Vertex v, std::complex<double> z);
/// Σ_j U_vj² / (z − (λ_j − b)); the eigen-sum form of the same quantity.
std::complex<double> resolvent_diag_eigensum(const Graph& g, MatrixKind kind, Vertex v, std::complex<double> z);

inline constexpr double kCoulsonTolerance = 1e-8;
inline constexpr int kCoulsonMaxDepth = 40;

struct CoulsonResult {
    double energy = 0.0;
    /// Accumulated imaginary part of the quadrature; the integrand's imaginary part is odd in x.
    double imaginary_residual = 0.0;
    int evaluations = 0;
    int max_depth = 0;
};

/// (1/π) ∫ (1 − ix Ψ_v(ix)) dx over ℝ, by x = tan θ and adaptive Simpson.
/// Throws QuadratureNoConvergence if leaves stopped by the depth cap carry more than `tolerance`
/// of estimated error.
CoulsonResult coulson_integral(const Graph& g, MatrixKind kind, Vertex v, double tolerance = kCoulsonTolerance);
double coulson_energy(const Graph& g, MatrixKind kind, Vertex v);
/// All vertices; shares the denominator polynomial across vertices.
VertexEnergyReport coulson_report(const Graph& g, MatrixKind kind, double tolerance = kCoulsonTolerance);

}  // namespace lapvertex
