#include <doctest.h>

#include <set>

#include "lapvertex/corpus.hpp"

using namespace lapvertex;

TEST_CASE("generator spec parsing") {
    const auto s = parse_generator_spec("star:5");
    CHECK(s.family == Family::Star);
    CHECK(s.params == std::vector<int>{5});
    CHECK(s.str() == "star:5");
    CHECK(s.build().n() == 5);

    const auto kb = parse_generator_spec("complete_bipartite:2,3");
    CHECK(kb.family == Family::CompleteBipartite);
    CHECK(kb.params == std::vector<int>{2, 3});
    CHECK(kb.str() == "complete_bipartite:2,3");
    CHECK(kb.build().m() == 6);

    for (const char* bad : {"star", "star:", "star:x", "star:5,", "star:5 ", "wheel:5", ":5", "path:1.5"}) {
        INFO(bad);
        try {
            parse_generator_spec(bad);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
    CHECK_THROWS_AS(parse_generator_spec("cycle:2").build(), Error);
    CHECK_THROWS_AS(parse_generator_spec("star:3,4").build(), Error);
}

TEST_CASE("family corpus") {
    const auto corpus = family_corpus(2, 12);
    CHECK(corpus.size() == 79);
    std::set<std::string> labels;
    for (const auto& e : corpus) {
        labels.insert(e.label);
        REQUIRE(e.generator);
        CHECK(e.generator->str() == e.label);
        CHECK_FALSE(e.seed);
        CHECK(e.graph.n() >= 2);
        CHECK(e.graph.n() <= 12);
    }
    CHECK(labels.size() == corpus.size());
    CHECK(labels.count("complete_bipartite:3,4") == 1);
    CHECK(labels.count("complete_bipartite:4,3") == 0);
    CHECK(labels.count("cycle:2") == 0);
}

TEST_CASE("random corpus") {
    const auto a = random_corpus({});
    CHECK(a.size() == 500);
    const auto b = random_corpus({});
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].label == b[i].label);
        CHECK(a[i].graph.edges() == b[i].graph.edges());
        REQUIRE(a[i].seed);
        CHECK(a[i].graph.n() >= 4);
        CHECK(a[i].graph.n() <= 10);
        CHECK(a[i].graph.edges() == random_connected(a[i].graph.n(), std::vector{0.3, 0.5, 0.8}[i % 3], *a[i].seed).edges());
    }
    CHECK(a[1].label.find("p=0.5") != std::string::npos);

    RandomCorpusSpec other;
    other.seed = 2;
    other.count = 20;
    const auto c = random_corpus(other);
    CHECK(c.size() == 20);
    bool differs = false;
    for (std::size_t i = 0; i < c.size(); ++i) differs |= c[i].graph.edges() != a[i].graph.edges();
    CHECK(differs);

    RandomCorpusSpec bad;
    bad.count = 0;
    CHECK_THROWS_AS(random_corpus(bad), Error);
    CHECK(default_corpus().size() == 579);
}

TEST_CASE("conjecture scan") {
    const auto records = conjecture_scan(family_corpus(2, 6));
    CHECK(records.size() == family_corpus(2, 6).size());
    bool p5 = false;
    for (const auto& r : records) {
        if (r.n == 5 && r.m == 4 && r.violated && r.worst_vertex == 2) p5 = true;
        CHECK(r.vertices.size() == static_cast<std::size_t>(r.n));
    }
    CHECK(p5);
}
