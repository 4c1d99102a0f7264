#include "lapvertex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lapvertex {

std::string_view to_string(EnergyMethod method) noexcept {
    switch (method) {
        case EnergyMethod::Spectral: return "spectral";
        case EnergyMethod::Coulson: return "coulson";
        case EnergyMethod::ClosedForm: return "closed_form";
    }
    return "unknown";
}

SpectralDecomposition eig_sym(const SymMatrix& m) {
    const int n = m.order();
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[idx(i, i)] = 1.0;

    const double threshold = kJacobiRelativeThreshold * m.frobenius();
    auto off_norm = [&] {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) sum += a[idx(i, j)] * a[idx(i, j)];
        return std::sqrt(sum);
    };

    int sweep = 0;
    for (;; ++sweep) {
        if (off_norm() <= threshold) break;
        if (sweep == kJacobiMaxSweeps) {
            throw Error(ErrorKind::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[idx(p, q)];
                if (apq == 0.0) continue;
                const double tau = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[idx(k, p)], akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[idx(p, k)], aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[idx(k, p)], vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[idx(x, x)] < a[idx(y, y)]; });

    SpectralDecomposition out;
    out.order = n;
    out.sweeps = sweep;
    out.eigenvalues.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = a[idx(order[j], order[j])];
        for (int i = 0; i < n; ++i) out.vectors[idx(i, j)] = v[idx(i, order[j])];
    }
    return out;
}

SymMatrix matrix_abs(const SpectralDecomposition& d) {
    const int n = d.order;
    SymMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = i; k < n; ++k) {
            double sum = 0.0;
            for (int j = 0; j < n; ++j) sum += d.vector(i, j) * std::abs(d.eigenvalues[j]) * d.vector(k, j);
            out.set(i, k, sum);
        }
    }
    return out;
}

SymMatrix matrix_abs(const SymMatrix& m) { return matrix_abs(eig_sym(m)); }

double VertexSpectralDistribution::total_weight() const {
    double sum = 0.0;
    for (const auto& atom : atoms) sum += atom.weight;
    return sum;
}

double VertexSpectralDistribution::moment(int k) const {
    double sum = 0.0;
    for (const auto& atom : atoms) sum += atom.weight * std::pow(atom.eigenvalue, k);
    return sum;
}

std::vector<double> vertex_energies(const SpectralDecomposition& d, double baseline) {
    std::vector<double> out(d.order, 0.0);
    for (int i = 0; i < d.order; ++i) {
        double sum = 0.0;
        for (int j = 0; j < d.order; ++j) {
            const double u = d.vector(i, j);
            sum += u * u * std::abs(d.eigenvalues[j] - baseline);
        }
        out[i] = sum;
    }
    return out;
}

VertexEnergyReport energy_report(const Graph& g, MatrixKind kind) {
    VertexEnergyReport report;
    report.kind = kind;
    report.method = EnergyMethod::Spectral;
    report.energies = vertex_energies(eig_sym(matrix(g, kind)), trace_baseline(g, kind));
    report.total = std::accumulate(report.energies.begin(), report.energies.end(), 0.0);
    return report;
}

double vertex_energy(const Graph& g, MatrixKind kind, Vertex v) {
    g.degree(v);  // range check
    return energy_report(g, kind).energies[v];
}

VertexSpectralDistribution vertex_distribution(const SpectralDecomposition& d, Vertex v) {
    if (v < 0 || v >= d.order) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    VertexSpectralDistribution out;
    int j = 0;
    while (j < d.order) {
        const double start = d.eigenvalues[j];
        const double tol = 1e-9 * std::max(1.0, std::abs(start));
        double weight = 0.0, value_sum = 0.0;
        int count = 0;
        for (; j < d.order && d.eigenvalues[j] - start <= tol; ++j) {
            const double u = d.vector(v, j);
            weight += u * u;
            value_sum += d.eigenvalues[j];
            ++count;
        }
        out.atoms.push_back({value_sum / count, weight});
    }
    return out;
}

VertexSpectralDistribution vertex_distribution(const Graph& g, MatrixKind kind, Vertex v) {
    g.degree(v);
    return vertex_distribution(eig_sym(matrix(g, kind)), v);
}

double spectral_moment(const SpectralDecomposition& d, Vertex v, int k) {
    if (v < 0 || v >= d.order) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    double sum = 0.0;
    for (int j = 0; j < d.order; ++j) {
        const double u = d.vector(v, j);
        sum += u * u * std::pow(d.eigenvalues[j], k);
    }
    return sum;
}

double moment(const Graph& g, MatrixKind kind, Vertex v, int k) {
    const double d = g.degree(v);
    if (k < 1 || k > 3) throw Error(ErrorKind::BadParams, "moment order must be 1, 2 or 3");
    const int triangles = triangle_count(g, v);

    switch (kind) {
        case MatrixKind::Adjacency:
            if (k == 1) return 0.0;
            if (k == 2) return d;
            return 2.0 * triangles;
        case MatrixKind::Laplacian: {
            if (k == 1) return d;
            if (k == 2) return d * d + d;
            double neighbor_degrees = 0.0;
            for (Vertex w : g.neighbors(v)) neighbor_degrees += g.degree(w);
            return d * d * d + 2.0 * d * d + neighbor_degrees - 2.0 * triangles;
        }
        case MatrixKind::NormalizedLaplacian: {
            if (k == 1) return 1.0;
            double walks2 = 0.0;
            for (Vertex w : g.neighbors(v)) walks2 += 1.0 / (d * g.degree(w));
            if (k == 2) return 1.0 + walks2;
            double walks3 = 0.0;
            const auto& nb = g.neighbors(v);
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    if (g.adjacent(nb[a], nb[b]))
                        walks3 += 2.0 / (d * g.degree(nb[a]) * g.degree(nb[b]));
            return 1.0 + 3.0 * walks2 - walks3;
        }
    }
    return 0.0;
}

}  // namespace lapvertex
