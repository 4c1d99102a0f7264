#include <doctest.h>

#include "lapvertex/geometry.hpp"
#include "oracles.hpp"

using namespace lapvertex;

namespace {

std::vector<Graph> sample_graphs() {
    std::vector<Graph> out{complete(2), complete(3), star(4), path(4), cycle(4), cycle(5), cycle(6),
                           complete(5), complete_bipartite(2, 3), path(7)};
    for (std::uint64_t seed = 0; seed < 40; ++seed) out.push_back(random_connected(3 + seed % 7, 0.5, seed));
    return out;
}

}  // namespace

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("Cheeger constant") {
    CHECK(cheeger(complete(2)).value == Rational(1));
    CHECK(cheeger(cycle(4)).value == Rational(1, 2));
    CHECK(cheeger(star(4)).value == Rational(1));
    CHECK(cheeger(cycle(6)).value == Rational(1, 3));
    CHECK_THROWS_AS(cheeger(build_graph(1, {})), Error);
    try {
        cheeger(path(25));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
    CHECK(cheeger(path(24)).value == Rational(1, 23));

    for (const Graph& g : sample_graphs()) {
        const auto result = cheeger(g);
        CHECK(result.value == oracle::cheeger(g));
        CHECK(result.value > Rational(0));
        CHECK(result.value <= Rational(1));
        CHECK(result.witness.front() == 0);
        CHECK(cheeger_quotient(g, result.witness) == result.value);
    }
}

TEST_CASE("dual Cheeger constant") {
    CHECK(dual_cheeger(complete(3)).value == Rational(2, 3));
    CHECK(dual_cheeger(complete(2)).value == Rational(1));
    for (const Graph& g : {star(4), path(4), cycle(4), cycle(6), complete_bipartite(3, 4)}) {
        const auto result = dual_cheeger(g);
        CHECK(result.value == Rational(1));
    }
    const auto c4 = dual_cheeger(cycle(4));
    CHECK(c4.first == std::vector<Vertex>{0, 2});
    CHECK(c4.second == std::vector<Vertex>{1, 3});
    try {
        dual_cheeger(path(16));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }

    for (const Graph& g : sample_graphs()) {
        const auto result = dual_cheeger(g);
        CHECK(result.value == oracle::dual_cheeger(g));
        CHECK(dual_cheeger_quotient(g, result.first, result.second) == result.value);
    }
    CHECK_THROWS_AS(dual_cheeger_quotient(path(3), {0}, {0, 1}), Error);
    CHECK_THROWS_AS(dual_cheeger_quotient(path(3), {}, {1}), Error);
}

TEST_CASE("shortest paths") {
    const auto p4 = shortest_path_dist(path(4));
    CHECK(p4[0 * 4 + 3] == 3);
    const auto s4 = shortest_path_dist(star(4));
    CHECK(s4[1 * 4 + 2] == 2);
    for (const Graph& g : sample_graphs()) {
        const auto d = shortest_path_dist(g);
        CHECK(d == oracle::distances(g));
        const int n = g.n();
        for (int i = 0; i < n; ++i) {
            CHECK(d[i * n + i] == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(d[i * n + j] == d[j * n + i]);
                for (int k = 0; k < n; ++k) CHECK(d[i * n + j] <= d[i * n + k] + d[k * n + j]);
            }
        }
    }
}

TEST_CASE("Wasserstein-1") {
    CHECK(wasserstein1(complete(2), 1, 0) == Rational(1));
    CHECK(wasserstein1(complete(3), 0, 1) == Rational(1, 2));
    CHECK(wasserstein1(cycle(5), 0, 1) == Rational(1));
    try {
        wasserstein1(path(3), 1, 1);
        FAIL("expected IdenticalVertices");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IdenticalVertices);
    }
    for (const Graph& g : sample_graphs()) {
        if (g.max_degree() > 4) continue;
        for (Vertex v = 0; v < g.n(); ++v) {
            for (Vertex w = v + 1; w < g.n(); ++w) {
                const Rational expected = oracle::wasserstein1(g, v, w);
                CHECK(wasserstein1(g, v, w) == expected);
                CHECK(wasserstein1(g, w, v) == expected);
            }
        }
    }
}

TEST_CASE("Ollivier-Ricci curvature") {
    const auto k2 = ollivier_ricci(complete(2));
    REQUIRE(k2.edges.size() == 1);
    CHECK(k2.edges[0].kappa == Rational(0));
    for (const auto& e : ollivier_ricci(complete(3)).edges) CHECK(e.kappa == Rational(1, 2));
    for (const auto& e : ollivier_ricci(cycle(6)).edges) CHECK(e.kappa == Rational(0));
    CHECK(ollivier_ricci(complete(3)).k_min == Rational(1, 2));
    CHECK_THROWS_AS(ollivier_ricci(build_graph(1, {})), Error);
    for (const Graph& g : sample_graphs()) {
        const auto report = ollivier_ricci(g);
        CHECK(report.edges.size() == static_cast<std::size_t>(g.m()));
        for (const auto& e : report.edges) {
            CHECK(e.kappa == Rational(1) - e.w1);
            CHECK(e.kappa <= Rational(1));
            CHECK(report.k_min <= e.kappa);
        }
    }
}
