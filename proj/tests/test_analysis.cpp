#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lapvertex/analysis.hpp"
#include "lapvertex/corpus.hpp"

using namespace lapvertex;

namespace {

Certificates only(const Certificates& certs, TheoremId id) {
    Certificates out;
    for (const auto& c : certs)
        if (c.theorem == id) out.push_back(c);
    return out;
}

const InequalityCertificate& at(const Certificates& certs, TheoremId id, Vertex v) {
    for (const auto& c : certs)
        if (c.theorem == id && c.v == v) return c;
    throw std::runtime_error("certificate not found");
}

}  // namespace

TEST_CASE("Randic indices") {
    CHECK(randic(star(4)).r_one == doctest::Approx(1.0));
    CHECK(randic(complete(4)).r_half == doctest::Approx(2.0));
    CHECK(randic(complete(2)).r_half == 1.0);
    CHECK(randic(complete(2)).r_one == 1.0);

    // independent accumulation order
    const Graph g = random_connected(10, 0.5, 8);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), std::mt19937_64(4));
    double half = 0.0, one = 0.0;
    for (auto [u, v] : edges) {
        half += std::pow(g.degree(u) * g.degree(v), -0.5);
        one += 1.0 / (g.degree(u) * g.degree(v));
    }
    CHECK(std::abs(randic(g).r_half - half) <= 1e-12);
    CHECK(std::abs(randic(g).r_one - one) <= 1e-12);
}

TEST_CASE("structural predicates") {
    CHECK(is_star_center(star(5), 0));
    CHECK_FALSE(is_star_center(star(5), 1));
    CHECK(is_star_center(complete(2), 1));
    CHECK_FALSE(is_star_center(path(4), 1));
    CHECK(is_complete_bipartite(complete_bipartite(2, 3)));
    CHECK(is_complete_bipartite(star(6)));
    CHECK(is_complete_bipartite(cycle(4)));
    CHECK_FALSE(is_complete_bipartite(cycle(6)));
    CHECK_FALSE(is_complete_bipartite(path(4)));
    CHECK_FALSE(is_complete_bipartite(complete(3)));
}

TEST_CASE("CS-AGM certificates") {
    const auto k2 = check_cs_agm(complete(2), MatrixKind::Laplacian);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].lhs == doctest::Approx(1.0));
    CHECK(std::abs(k2[0].slack) <= 1e-12);

    const auto s4 = check_cs_agm(star(4), MatrixKind::Laplacian);
    CHECK(s4[0].lhs == doctest::Approx(2.25 * 11.0 / 12.0));
    CHECK(s4[0].rhs == 1.0);
    CHECK(s4[1].rhs == 2.0);

    const auto nl = check_cs_agm(star(4), MatrixKind::NormalizedLaplacian);
    CHECK(nl[0].lhs == doctest::Approx(1.0 / 3.0));
    CHECK(nl[0].rhs == doctest::Approx(1.0 / 3.0));
    CHECK(std::abs(nl[0].slack) <= 1e-9);
    CHECK(nl[1].rhs == doctest::Approx(2.0 / std::sqrt(3.0)));
}

TEST_CASE("McClelland and lower Laplacian bound") {
    const auto k2 = check_mcclelland(complete(2));
    CHECK(std::abs(k2[0].slack) <= 1e-9);
    CHECK(*k2[0].equality_predicate);
    const auto s4 = check_mcclelland(star(4));
    CHECK(s4[0].rhs == doctest::Approx(std::sqrt(5.25)));
    CHECK_FALSE(*s4[0].equality_predicate);
    CHECK(check_mcclelland(cycle(4))[0].rhs == doctest::Approx(std::sqrt(2.0)));

    const auto lower_k2 = check_laplacian_lower(complete(2));
    CHECK(std::abs(lower_k2[0].slack) <= 1e-9);
    CHECK(*lower_k2[0].equality_predicate);
    CHECK(check_laplacian_lower(star(4))[0].rhs == doctest::Approx(2.1));
    CHECK(check_laplacian_lower(complete(4))[0].rhs == doctest::Approx(1.0));
    CHECK(check_laplacian_lower(complete(4))[0].lhs == doctest::Approx(1.5));
}

TEST_CASE("normalized energy bounds") {
    const auto s4 = check_nle_bounds(star(4));
    const auto& centre = at(s4, TheoremId::NleUpper, 0);
    CHECK(centre.rhs == doctest::Approx(1.0));
    CHECK(std::abs(centre.slack) <= 1e-9);
    CHECK(*centre.equality_predicate);
    const auto& leaf = at(s4, TheoremId::NleLower, 1);
    CHECK(leaf.rhs == doctest::Approx(1.0 / 3.0));
    CHECK(std::abs(leaf.slack) <= 1e-9);
    CHECK(*leaf.equality_predicate);
    CHECK(s4.size() == 16);

    // P_5: tight at the centre under the lower bound, though not complete bipartite.
    const auto p5 = only(check_nle_bounds(path(5)), TheoremId::NleLower);
    CHECK(std::abs(p5[2].slack) <= 1e-9);
    CHECK(p5[0].slack > 1e-6);
    CHECK_FALSE(*p5[2].equality_predicate);
}

TEST_CASE("Randic theorems and chains") {
    const auto s4 = check_randic_theorems(star(4));
    CHECK(s4[0].lhs == doctest::Approx(5.0));
    CHECK(s4[0].rhs == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(std::abs(s4[1].slack) <= 1e-9);
    CHECK(std::abs(check_randic_theorems(complete(2))[0].slack) <= 1e-9);

    const auto chains = bound_improvement_report(star(4));
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].energy == doctest::Approx(5.0));
    CHECK(chains[0].middle == doctest::Approx(std::sqrt(5.25) + 3.0 * std::sqrt(1.25)));
    CHECK(chains[0].outer == doctest::Approx(6.0));
    CHECK(chains[1].energy == doctest::Approx(2.0));
    CHECK(chains[1].middle == doctest::Approx(1.0 + 3.0 * std::sqrt(1.0 / 3.0)));
    CHECK(chains[1].outer == doctest::Approx(std::sqrt(8.0)));
    for (const auto& chain : bound_improvement_report(cycle(7)))
        CHECK(std::abs(chain.certificates[1].slack) <= 1e-9);
}

TEST_CASE("geometric bounds") {
    const auto k3 = check_geometric_bounds(complete(3));
    CHECK(k3.cheeger.value == Rational(1));
    CHECK(k3.dual_cheeger.value == Rational(2, 3));
    CHECK(k3.k_min == Rational(1, 2));
    CHECK(k3.alpha == doctest::Approx(std::sqrt(8.0) / 3.0));
    const auto& cheeger_v = at(k3.certificates, TheoremId::CheegerVertex, 0);
    CHECK(cheeger_v.rhs == doctest::Approx(1.0 / 3.0 + std::sqrt(8.0) / 3.0 * 2.0 / 3.0));
    CHECK(cheeger_v.lhs == doctest::Approx(2.0 / 3.0));
    for (Vertex v = 0; v < 3; ++v) CHECK(std::abs(at(k3.certificates, TheoremId::CurvatureVertex, v).slack) <= 1e-9);

    const auto bip = check_geometric_bounds(cycle(6));
    CHECK(bip.alpha == 1.0);
    CHECK_THROWS_AS(check_geometric_bounds(path(16)), Error);

    for (const auto& c : check_spectral_sandwiches(complete(3), k3)) CHECK(c.passed);
}

TEST_CASE("edge energy decomposes the total") {
    CHECK(edge_energy(complete(2), MatrixKind::Laplacian, 0, 1) == doctest::Approx(2.0));
    CHECK(edge_energy(star(4), MatrixKind::Laplacian, 0, 1) == doctest::Approx(2.25 / 3.0 + 11.0 / 12.0));
    try {
        edge_energy(path(3), MatrixKind::Laplacian, 0, 2);
        FAIL("expected NotAnEdge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAnEdge);
    }
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = random_connected(5 + seed % 6, 0.5, seed);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
            double sum = 0.0;
            for (auto [v, w] : g.edges()) sum += edge_energy(g, kind, v, w);
            CHECK(std::abs(sum - energy_report(g, kind).total) <= 1e-9 * g.m());
        }
    }
}

TEST_CASE("conjecture records") {
    const auto regular = conjecture_record(cycle(6));
    CHECK_FALSE(regular.violated);
    CHECK(std::abs(regular.margin) <= 1e-9);

    const auto s4 = conjecture_record(star(4));
    CHECK(s4.vertices[0].adjacency_energy == doctest::Approx(std::sqrt(3.0)));
    CHECK(s4.vertices[0].lower == doctest::Approx(1.0));
    CHECK(s4.vertices[0].upper == doctest::Approx(3.0));
    CHECK_FALSE(s4.violated);

    // P_5 centre: 𝓔 = 2/√3 exceeds d_max·𝓛𝓔 = 1.
    const auto p5 = conjecture_record(path(5));
    CHECK(p5.violated);
    CHECK(p5.worst_vertex == 2);
    CHECK(p5.margin == doctest::Approx(1.0 - 2.0 / std::sqrt(3.0)));

    auto copy = p5;
    copy.vertices[2].upper = copy.vertices[2].adjacency_energy + 1.0;
    apply_conjecture_verdict(copy);
    CHECK_FALSE(copy.violated);
}

TEST_CASE("every certificate holds across sampled graphs") {
    auto corpus = family_corpus(2, 9);
    RandomCorpusSpec spec;
    spec.count = 60;
    spec.seed = 99;
    const auto random = random_corpus(spec);
    corpus.insert(corpus.end(), random.begin(), random.end());
    for (const auto& entry : corpus) {
        const Graph& g = entry.graph;
        Certificates all = check_mcclelland(g);
        auto add = [&](const Certificates& c) { all.insert(all.end(), c.begin(), c.end()); };
        add(check_laplacian_lower(g));
        add(check_nle_bounds(g));
        add(check_randic_theorems(g));
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian})
            add(check_cs_agm(g, kind));
        for (const auto& chain : bound_improvement_report(g)) add(chain.certificates);
        const auto geo = check_geometric_bounds(g);
        add(geo.certificates);
        add(check_spectral_sandwiches(g, geo));
        for (const auto& c : all) {
            INFO(entry.label, " ", to_string(c.theorem), " v=", c.v);
            CHECK(c.passed);
        }
    }
}
