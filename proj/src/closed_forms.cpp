#include "lapvertex/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lapvertex/spectral.hpp"

namespace lapvertex {

namespace {

void check_label(int n, int k) {
    if (n < 2) throw Error(ErrorKind::BadIndex, "closed forms need n >= 2, got " + std::to_string(n));
    if (k < 1 || k > n) {
        throw Error(ErrorKind::BadIndex, "vertex label " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

double star_laplacian_energy(int n, int k) {
    check_label(n, k);
    const double x = n;
    if (k == 1) return (x - 1.0) * (x * x - 2.0 * x + 4.0) / (x * x);
    return (x * x * x - x * x - 2.0 * x + 4.0) / (x * x * (x - 1.0));
}

double star_normalized_energy(int n, int k) {
    check_label(n, k);
    return k == 1 ? 1.0 : 1.0 / (n - 1.0);
}

double path_laplacian_energy(int n, int k) {
    check_label(n, k);
    const double x = n;
    const double pi = std::numbers::pi;
    double sum = 0.0;
    for (int i = 1; i < n; ++i) {
        const double c = std::cos(pi * i * k / x - pi * i / (2.0 * x));
        sum += c * c / x * std::abs(1.0 / x - std::cos(pi * i / x));
    }
    return 2.0 * (x - 1.0) / (x * x) + 4.0 * sum;
}

std::pair<double, double> star_totals(int n) {
    if (n < 2) throw Error(ErrorKind::BadIndex, "star totals need n >= 2, got " + std::to_string(n));
    const double x = n;
    return {(x - 2.0) * (x - 2.0) / x + x, 2.0};
}

bool has_closed_form(Family family, MatrixKind kind) noexcept {
    if (family == Family::Star) return kind != MatrixKind::Adjacency;
    if (family == Family::Path) return kind == MatrixKind::Laplacian;
    return false;
}

std::vector<double> closed_form_energies(Family family, int n, MatrixKind kind) {
    if (!has_closed_form(family, kind)) {
        throw Error(ErrorKind::BadParams, "no closed form for " + std::string(to_string(family)) + " with " +
                                              std::string(to_string(kind)));
    }
    std::vector<double> out;
    for (int k = 1; k <= n; ++k) {
        if (family == Family::Path) {
            out.push_back(path_laplacian_energy(n, k));
        } else if (kind == MatrixKind::Laplacian) {
            out.push_back(star_laplacian_energy(n, k));
        } else {
            out.push_back(star_normalized_energy(n, k));
        }
    }
    return out;
}

PathFormulaValidation validate_path_formula(int n_max, double tolerance) {
    PathFormulaValidation out;
    for (int n = 2; n <= n_max; ++n) {
        const auto spectral = energy_report(path(n), MatrixKind::Laplacian).energies;
        for (int k = 1; k <= n; ++k) {
            const double formula = path_laplacian_energy(n, k);
            const double deviation = std::abs(formula - spectral[k - 1]);
            ++out.checked;
            out.max_deviation = std::max(out.max_deviation, deviation);
            if (deviation > tolerance) out.findings.push_back({n, k, formula, spectral[k - 1], deviation});
        }
    }
    return out;
}

}  // namespace lapvertex
