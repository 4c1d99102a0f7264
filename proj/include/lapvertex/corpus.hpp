#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapvertex/analysis.hpp"
#include "lapvertex/graph.hpp"

namespace lapvertex {

struct GeneratorSpec {
    Family family = Family::Star;
    std::vector<int> params;

    std::string str() const;
    Graph build() const;
};

/// `family:param[,param]`, e.g. "star:5" or "complete_bipartite:2,3". ParseError on malformed text.
GeneratorSpec parse_generator_spec(std::string_view text);

struct CorpusEntry {
    /// Generator spec for family graphs, "random:n=…,p=…,seed=…" otherwise.
    std::string label;
    Graph graph;
    std::optional<std::uint64_t> seed;
    std::optional<GeneratorSpec> generator;
};

struct RandomCorpusSpec {
    int n_min = 4;
    int n_max = 10;
    int count = 500;
    std::vector<double> probabilities{0.3, 0.5, 0.8};
    std::uint64_t seed = 1;
};

/// Every generator family for n in [n_min, n_max]; complete_bipartite(a, b) with a ≤ b, a + b in range.
std::vector<CorpusEntry> family_corpus(int n_min = 2, int n_max = 12);
/// Graph i uses p = probabilities[i mod |p|] and n and the graph seed drawn from a splitmix64 stream.
std::vector<CorpusEntry> random_corpus(const RandomCorpusSpec& spec);
/// family_corpus(2, 12) followed by random_corpus({}).
std::vector<CorpusEntry> default_corpus();

std::vector<ConjectureScanRecord> conjecture_scan(const std::vector<CorpusEntry>& corpus,
                                                  double tolerance = kCertificateTolerance);

}  // namespace lapvertex
