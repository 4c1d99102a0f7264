#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lapvertex/coulson.hpp"

using namespace lapvertex;
using cd = std::complex<double>;

namespace {

void check_coefficients(const CharPoly& p, std::vector<double> expected, double tol = 1e-9) {
    REQUIRE(p.coefficients.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(p.coefficients[i] - expected[i]) <= tol);
}

constexpr MatrixKind kKinds[] = {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian};

}  // namespace

TEST_CASE("characteristic polynomials") {
    for (auto method : {CharPolyMethod::FaddeevLeVerrier, CharPolyMethod::Tridiagonal}) {
        check_coefficients(char_poly(matrix(complete(2), MatrixKind::Laplacian), method), {0, -2, 1});
        check_coefficients(char_poly(matrix(path(3), MatrixKind::Adjacency), method), {0, -2, 0, 1});
        check_coefficients(char_poly(matrix(star(4), MatrixKind::Laplacian), method), {0, -4, 9, -6, 1});
    }
    CHECK(char_poly(SymMatrix(0)).coefficients == std::vector<double>{1.0});
}

TEST_CASE("Faddeev-LeVerrier on small integer matrices has integer coefficients") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_connected(5 + seed % 8, 0.4, seed);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
            const SymMatrix m = matrix(g, kind);
            const CharPoly fl = char_poly(m);
            const CharPoly tri = char_poly(m, CharPolyMethod::Tridiagonal);
            double scale = 1.0;
            for (double c : fl.coefficients) scale = std::max(scale, std::abs(c));
            for (std::size_t i = 0; i < fl.coefficients.size(); ++i) {
                CHECK(std::abs(fl.coefficients[i] - std::round(fl.coefficients[i])) <= 1e-6);
                CHECK(std::abs(fl.coefficients[i] - tri.coefficients[i]) <= 1e-9 * scale);
            }
            CHECK(std::abs(fl.coefficients[m.order() - 1] + m.trace()) <= 1e-9 * std::max(1.0, m.max_abs()));
            if (kind == MatrixKind::Laplacian) CHECK(std::abs(fl.coefficients[0]) <= 1e-6);

            // roots substituted back
            for (double lambda : eig_sym(m).eigenvalues) CHECK(std::abs(tri(lambda)) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("principal minors") {
    CHECK(principal_minor(matrix(complete(2), MatrixKind::Laplacian), 0) == SymMatrix::from_rows(1, {1}));
    CHECK(principal_minor(matrix(star(4), MatrixKind::Laplacian), 0) == SymMatrix::identity(3));
    CHECK(principal_minor(matrix(path(3), MatrixKind::Adjacency), 1) == SymMatrix(2));
    CHECK_THROWS_AS(principal_minor(SymMatrix::identity(3), 3), Error);
    CHECK_THROWS_AS(principal_minor(SymMatrix::identity(1), 0), Error);
}

TEST_CASE("baseline nullity") {
    CHECK(baseline_nullity(star(5), MatrixKind::Laplacian) == 0);
    CHECK(baseline_nullity(star(5), MatrixKind::NormalizedLaplacian) == 3);
    CHECK(baseline_nullity(star(5), MatrixKind::Adjacency) == 3);
    CHECK(baseline_nullity(complete(4), MatrixKind::Adjacency) == 0);
    // C_4: L spectrum {0, 2, 2, 4}, 2m/n = 2
    CHECK(baseline_nullity(cycle(4), MatrixKind::Laplacian) == 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_connected(6 + seed % 5, 0.4, seed);
        for (auto kind : kKinds) {
            const double b = trace_baseline(g, kind);
            int count = 0;
            for (double lambda : eig_sym(matrix(g, kind)).eigenvalues) count += std::abs(lambda - b) <= 1e-8;
            CHECK(baseline_nullity(g, kind) == count);
        }
    }
}

TEST_CASE("resolvent diagonal") {
    // Shifted eigenvalues of L(K_2) − I are ±1 with weights ½, so Ψ(3) = ½·¼ + ½·½.
    CHECK(resolvent_diag(complete(2), MatrixKind::Laplacian, 0, 3.0).real() == doctest::Approx(0.375));
    CHECK(resolvent_diag_eigensum(complete(2), MatrixKind::Laplacian, 0, 3.0).real() == doctest::Approx(0.375));
    CHECK_THROWS_AS(resolvent_diag(complete(2), MatrixKind::Laplacian, 0, 1.0), Error);
    try {
        resolvent_diag(complete(2), MatrixKind::Laplacian, 0, cd(-1.0, 1e-9));
        FAIL("expected NearPole");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NearPole);
    }

    const cd z(0.0, 5.0);
    const cd a = resolvent_diag(star(4), MatrixKind::Laplacian, 0, z);
    const cd b = resolvent_diag_eigensum(star(4), MatrixKind::Laplacian, 0, z);
    CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));

    const ResolventDiag psi = resolvent(path(5), MatrixKind::Laplacian, 2);
    CHECK(psi.numerator.degree() == psi.denominator.degree() - 1);
    const cd far(1e7, 3e6);
    CHECK(std::abs(far * psi(far) - 1.0) <= 1e-6);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_connected(4 + seed % 6, 0.5, seed);
        for (auto kind : kKinds) {
            for (int k = 0; k < 20; ++k) {
                const cd point(coord(rng), coord(rng));
                const Vertex v = static_cast<Vertex>(rng() % g.n());
                const cd exact = resolvent_diag_eigensum(g, kind, v, point);
                CHECK(std::abs(resolvent_diag(g, kind, v, point) - exact) <= 1e-8 * std::abs(exact));
            }
        }
    }
}

TEST_CASE("Coulson integral matches known values") {
    CHECK(std::abs(coulson_energy(star(4), MatrixKind::Laplacian, 0) - 2.25) <= 1e-6);
    CHECK(std::abs(coulson_energy(complete(2), MatrixKind::Laplacian, 0) - 1.0) <= 1e-6);
    CHECK(std::abs(coulson_energy(complete(2), MatrixKind::Laplacian, 1) - 1.0) <= 1e-6);
    CHECK(std::abs(coulson_energy(path(4), MatrixKind::Laplacian, 0) -
                   vertex_energy(path(4), MatrixKind::Laplacian, 0)) <= 1e-6);
    CHECK(coulson_energy(build_graph(1, {}), MatrixKind::Adjacency, 0) == 0.0);
}

TEST_CASE("Coulson agrees with the spectral engine") {
    std::vector<Graph> graphs{star(12), path(12), cycle(9), complete(8), complete_bipartite(3, 6), star(30)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) graphs.push_back(random_connected(4 + seed % 7, 0.5, seed));
    for (const Graph& g : graphs) {
        for (auto kind : kKinds) {
            const auto spectral = energy_report(g, kind);
            const auto coulson = coulson_report(g, kind);
            CHECK(coulson.method == EnergyMethod::Coulson);
            for (int v = 0; v < g.n(); ++v) {
                CHECK(std::abs(coulson.energies[v] - spectral.energies[v]) <= 1e-6);
                CHECK(coulson.residuals[v] <= 1e-6);
            }
        }
    }
}

TEST_CASE("quadrature diagnostics") {
    const CoulsonResult r = coulson_integral(path(6), MatrixKind::Laplacian, 2);
    CHECK(r.evaluations > 0);
    CHECK(r.max_depth <= kCoulsonMaxDepth);
    CHECK(r.imaginary_residual <= 1e-6);
    CHECK_THROWS_AS(coulson_integral(path(6), MatrixKind::Laplacian, 6), Error);
}
