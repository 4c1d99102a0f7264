#include "lapvertex/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lapvertex {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Family parse_family(std::string_view name) {
    for (auto family : {Family::Star, Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite}) {
        if (name == to_string(family)) return family;
    }
    throw Error(ErrorKind::ParseError, "unknown graph family '" + std::string(name) + "'");
}

}  // namespace

std::string GeneratorSpec::str() const {
    std::string out(to_string(family));
    for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
    return out;
}

Graph GeneratorSpec::build() const { return generator(family, params); }

GeneratorSpec parse_generator_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "generator spec '" + std::string(text) + "' lacks ':'");
    }
    GeneratorSpec spec;
    spec.family = parse_family(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw Error(ErrorKind::ParseError, "bad generator parameter '" + std::string(token) + "'");
        }
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

std::vector<CorpusEntry> family_corpus(int n_min, int n_max) {
    std::vector<CorpusEntry> out;
    auto add = [&](Family family, std::vector<int> params) {
        GeneratorSpec spec{family, std::move(params)};
        out.push_back({spec.str(), spec.build(), std::nullopt, spec});
    };
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
        add(Family::Star, {n});
        add(Family::Path, {n});
        if (n >= 3) add(Family::Cycle, {n});
        add(Family::Complete, {n});
        for (int a = 1; 2 * a <= n; ++a) add(Family::CompleteBipartite, {a, n - a});
    }
    return out;
}

std::vector<CorpusEntry> random_corpus(const RandomCorpusSpec& spec) {
    if (spec.count < 1) throw Error(ErrorKind::BadParams, "corpus count must be >= 1");
    if (spec.n_min < 1 || spec.n_max < spec.n_min) throw Error(ErrorKind::BadParams, "bad vertex-count range");
    if (spec.probabilities.empty()) throw Error(ErrorKind::BadParams, "no edge probabilities given");

    std::vector<CorpusEntry> out;
    std::uint64_t state = spec.seed;
    const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    for (int i = 0; i < spec.count; ++i) {
        const int n = spec.n_min + static_cast<int>(splitmix64(state) % span);
        const double p = spec.probabilities[static_cast<std::size_t>(i) % spec.probabilities.size()];
        const std::uint64_t seed = splitmix64(state);
        std::ostringstream label;
        label << "random:n=" << n << ",p=" << p << ",seed=" << seed;
        out.push_back({label.str(), random_connected(n, p, seed), seed, std::nullopt});
    }
    return out;
}

std::vector<CorpusEntry> default_corpus() {
    auto out = family_corpus(2, 12);
    auto random = random_corpus({});
    out.insert(out.end(), std::make_move_iterator(random.begin()), std::make_move_iterator(random.end()));
    return out;
}

std::vector<ConjectureScanRecord> conjecture_scan(const std::vector<CorpusEntry>& corpus, double tolerance) {
    std::vector<ConjectureScanRecord> out;
    out.reserve(corpus.size());
    for (const auto& entry : corpus) out.push_back(conjecture_record(entry.graph, entry.seed, tolerance));
    return out;
}

}  // namespace lapvertex
