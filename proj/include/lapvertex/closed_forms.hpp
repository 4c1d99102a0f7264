#pragma once

#include <utility>
#include <vector>

#include "lapvertex/graph.hpp"

namespace lapvertex {

// Vertex labels here are 1-based: label 1 is the star centre and the first path endpoint.

/// (n−1)(n² − 2n + 4)/n² at the centre, (n³ − n² − 2n + 4)/(n²(n−1)) at a leaf.
double star_laplacian_energy(int n, int k);
/// 1 at the centre, 1/(n−1) at a leaf.
double star_normalized_energy(int n, int k);
/// 2(n−1)/n² + 4 Σ_{i=1}^{n−1} cos²(πik/n − πi/2n)/n · |1/n − cos(πi/n)|
double path_laplacian_energy(int n, int k);
/// (Laplacian total, normalized total) = ((n−2)²/n + n, 2).
std::pair<double, double> star_totals(int n);

/// Closed-form vertex energies for a generator family, 0-based vertices. BadParams when the
/// family/kind pair has no closed form (only star L/𝓛 and path L do).
std::vector<double> closed_form_energies(Family family, int n, MatrixKind kind);
bool has_closed_form(Family family, MatrixKind kind) noexcept;

inline constexpr double kPathFormulaTolerance = 1e-9;

/// A (n, k) where the path trigonometric sum disagrees with the spectral engine.
struct PathFormulaFinding {
    int n = 0;
    int k = 0;
    double formula = 0.0;
    double spectral = 0.0;
    double deviation = 0.0;
};

struct PathFormulaValidation {
    int checked = 0;
    double max_deviation = 0.0;
    /// Erratum findings; empty when the formula holds everywhere.
    std::vector<PathFormulaFinding> findings;
};

PathFormulaValidation validate_path_formula(int n_max, double tolerance = kPathFormulaTolerance);

}  // namespace lapvertex
