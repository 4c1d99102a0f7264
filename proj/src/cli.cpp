#include "lapvertex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapvertex/analysis.hpp"
#include "lapvertex/closed_forms.hpp"
#include "lapvertex/corpus.hpp"
#include "lapvertex/coulson.hpp"
#include "lapvertex/geometry.hpp"
#include "lapvertex/spectral.hpp"

namespace lapvertex {

using Json = nlohmann::ordered_json;

double report_real(double value) {
    if (!std::isfinite(value)) return value;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    const double rounded = std::strtod(buffer, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;  // no "-0.0"
}

namespace {

Json real(double value) {
    if (!std::isfinite(value)) return nullptr;
    return report_real(value);
}

Json reals(const std::vector<double>& values) {
    Json out = Json::array();
    for (double v : values) out.push_back(real(v));
    return out;
}

Json rational(const Rational& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"text", to_string(r)}, {"value", real(to_double(r))}};
}

std::string hex64(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

Json edge_list(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (auto [u, v] : edges) out.push_back(Json::array({u, v}));
    return out;
}

struct Options {
    std::string gen;
    std::string graph_file;
    std::string corpus;
    std::string kind = "laplacian";
    std::string method = "spectral";
    std::string suite = "all";
    std::string n_range = "4..10";
    std::vector<double> probabilities{0.3, 0.5, 0.8};
    int count = 500;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::string out;
};

/// Graph plus how it was obtained.
struct Source {
    std::string label;
    std::optional<Graph> graph;
    std::optional<GeneratorSpec> generator;
    std::optional<std::uint64_t> seed;
    Json descriptor;
};

Json graph_fields(Json descriptor, const Graph& g) {
    descriptor["n"] = g.n();
    descriptor["m"] = g.m();
    descriptor["fingerprint"] = hex64(fingerprint(g));
    return descriptor;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto number = [&](std::string_view s) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw Error(ErrorKind::ParseError, "bad range '" + text + "', expected a..b");
        }
        return value;
    };
    if (dots == std::string::npos) {
        const int n = number(text);
        return {n, n};
    }
    return {number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
}

std::vector<Source> corpus_sources(const Options& o) {
    std::vector<CorpusEntry> entries;
    if (o.corpus == "default") {
        entries = default_corpus();
    } else if (o.corpus == "families") {
        entries = family_corpus();
    } else if (o.corpus == "random") {
        RandomCorpusSpec spec;
        std::tie(spec.n_min, spec.n_max) = parse_range(o.n_range);
        spec.count = o.count;
        spec.probabilities = o.probabilities;
        spec.seed = o.seed;
        entries = random_corpus(spec);
    } else {
        throw Error(ErrorKind::BadParams, "unknown corpus '" + o.corpus + "' (default, families, random)");
    }
    std::vector<Source> out;
    for (auto& e : entries) {
        Json d;
        d["label"] = e.label;
        if (e.seed) d["seed"] = *e.seed;
        out.push_back({e.label, e.graph, e.generator, e.seed, graph_fields(d, e.graph)});
    }
    return out;
}

Source single_source(const Options& o) {
    if (!o.gen.empty()) {
        auto spec = parse_generator_spec(o.gen);
        Graph g = spec.build();
        Json d{{"source", "generator"}, {"spec", spec.str()}};
        return {spec.str(), g, spec, std::nullopt, graph_fields(d, g)};
    }
    std::ifstream in(o.graph_file, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + o.graph_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    Graph g = parse_edge_list(std::string_view(text));
    Json d{{"source", "file"}, {"path", o.graph_file}, {"content_hash", hex64(fnv1a(text))}};
    return {o.graph_file, g, std::nullopt, std::nullopt, graph_fields(d, g)};
}

void require_one_source(const Options& o, bool allow_corpus) {
    const int given = !o.gen.empty() + !o.graph_file.empty() + !o.corpus.empty();
    if (given != 1) {
        throw CLI::ValidationError(allow_corpus ? "exactly one of --gen, --graph, --corpus is required"
                                                : "exactly one of --gen, --graph is required");
    }
}

std::vector<Source> sources(const Options& o) {
    require_one_source(o, true);
    if (!o.corpus.empty()) return corpus_sources(o);
    std::vector<Source> out;
    out.push_back(single_source(o));
    return out;
}

// ---------------------------------------------------------------------------
// energy

Json cmd_energy(const Options& o) {
    const Source src = single_source(o);
    const Graph& g = *src.graph;
    const MatrixKind kind = parse_matrix_kind(o.kind);
    const double tol = o.tol.value_or(kCoulsonTolerance);

    const bool all = o.method == "all";
    if (!all && o.method != "spectral" && o.method != "coulson" && o.method != "closed_form") {
        throw CLI::ValidationError("--method must be spectral, coulson, closed_form or all");
    }

    Json methods = Json::object();
    std::vector<std::vector<double>> collected;
    if (all || o.method == "spectral") {
        const auto report = energy_report(g, kind);
        methods["spectral"] = Json{{"energies", reals(report.energies)}, {"total", real(report.total)}};
        collected.push_back(report.energies);
    }
    if (all || o.method == "coulson") {
        const auto report = coulson_report(g, kind, tol);
        methods["coulson"] = Json{{"energies", reals(report.energies)},
                                  {"total", real(report.total)},
                                  {"imaginary_residuals", reals(report.residuals)}};
        collected.push_back(report.energies);
    }
    const bool closed_available = src.generator && has_closed_form(src.generator->family, kind);
    if (o.method == "closed_form" && !closed_available) {
        throw Error(ErrorKind::BadParams, "closed forms exist only for star (laplacian, normalized) and path "
                                          "(laplacian) generators");
    }
    if (closed_available && (all || o.method == "closed_form")) {
        const auto energies = closed_form_energies(src.generator->family, g.n(), kind);
        double total = 0.0;
        for (double e : energies) total += e;
        methods["closed_form"] = Json{{"energies", reals(energies)}, {"total", real(total)}};
        collected.push_back(energies);
    }

    Json result{{"kind", to_string(kind)}, {"methods", methods}};
    if (all) {
        double deviation = 0.0;
        for (std::size_t a = 0; a < collected.size(); ++a)
            for (std::size_t b = a + 1; b < collected.size(); ++b)
                for (int v = 0; v < g.n(); ++v)
                    deviation = std::max(deviation, std::abs(collected[a][v] - collected[b][v]));
        result["max_deviation"] = real(deviation);
    }
    return Json{{"graph", src.descriptor}, {"result", result}};
}

// ---------------------------------------------------------------------------
// verify

Json certificate_json(const InequalityCertificate& c) {
    Json j;
    j["theorem"] = to_string(c.theorem);
    j["scope"] = to_string(c.scope);
    if (c.v >= 0) j["v"] = c.v;
    if (c.w >= 0) j["w"] = c.w;
    if (c.kind) j["kind"] = to_string(*c.kind);
    j["lhs"] = real(c.lhs);
    j["relation"] = to_string(c.relation);
    j["rhs"] = real(c.rhs);
    j["slack"] = real(c.slack);
    if (c.equality_predicate) {
        j["equality_predicate"] = *c.equality_predicate;
        j["equality_observed"] = std::abs(c.slack) <= kSpectrumMatchTolerance;
    }
    j["passed"] = c.passed;
    return j;
}

const std::vector<std::string> kSuites{"all", "mcclelland", "lower", "nle", "randic", "geometry", "csagm", "chains"};

struct VerifyTally {
    long certificates = 0;
    long failures = 0;
};

Json verify_graph(const Source& src, const std::string& suite, double tol, VerifyTally& tally) {
    const Graph& g = *src.graph;
    const bool all = suite == "all";
    Certificates certs;
    auto append = [&](const Certificates& more) { certs.insert(certs.end(), more.begin(), more.end()); };
    Json extra = Json::object();
    Json skipped = Json::array();

    if (all || suite == "csagm") {
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian})
            append(check_cs_agm(g, kind, tol));
    }
    if (all || suite == "mcclelland") append(check_mcclelland(g, tol));
    if (all || suite == "lower") append(check_laplacian_lower(g, tol));
    if (all || suite == "nle") append(check_nle_bounds(g, tol));
    if (all || suite == "randic") {
        append(check_randic_theorems(g, tol));
        const auto r = randic(g);
        extra["randic"] = Json{{"r_half", real(r.r_half)}, {"r_one", real(r.r_one)}};
    }
    if (all || suite == "chains") {
        Json chains = Json::array();
        for (const auto& chain : bound_improvement_report(g, tol)) {
            chains.push_back(Json{{"kind", to_string(chain.kind)},
                                  {"energy", real(chain.energy)},
                                  {"middle", real(chain.middle)},
                                  {"outer", real(chain.outer)}});
            append(chain.certificates);
        }
        extra["chains"] = chains;
    }
    if (suite == "geometry" || (all && g.n() <= kDualCheegerMaxVertices)) {
        const auto bounds = check_geometric_bounds(g, tol);
        append(bounds.certificates);
        append(check_spectral_sandwiches(g, bounds, tol));
        extra["geometry"] = Json{{"cheeger", rational(bounds.cheeger.value)},
                                 {"dual_cheeger", rational(bounds.dual_cheeger.value)},
                                 {"k_min", rational(bounds.k_min)},
                                 {"alpha", real(bounds.alpha)}};
    } else if (all) {
        skipped.push_back("geometry: n exceeds " + std::to_string(kDualCheegerMaxVertices));
    }

    Json list = Json::array();
    long failures = 0;
    for (const auto& c : certs) {
        list.push_back(certificate_json(c));
        failures += !c.passed;
    }
    tally.certificates += static_cast<long>(certs.size());
    tally.failures += failures;

    Json out{{"graph", src.descriptor}};
    for (auto& [key, value] : extra.items()) out[key] = value;
    out["certificates"] = list;
    if (!skipped.empty()) out["skipped"] = skipped;
    out["failures"] = failures;
    if (failures > 0) out["edges"] = edge_list(g.edges());
    return out;
}

Json cmd_verify(const Options& o, std::ostream& err, int& exit_code) {
    if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end()) {
        throw CLI::ValidationError("unknown --suite '" + o.suite + "'");
    }
    const double tol = o.tol.value_or(kCertificateTolerance);
    VerifyTally tally;
    Json graphs = Json::array();
    for (const auto& src : sources(o)) graphs.push_back(verify_graph(src, o.suite, tol, tally));
    if (tally.failures > 0) {
        exit_code = kExitCertificateFailure;
        err << "verify: " << tally.failures << " certificate failure(s)\n";
    }
    return Json{{"suite", o.suite},
                {"tolerance", tol},
                {"graphs", graphs},
                {"summary", Json{{"graphs", graphs.size()},
                                 {"certificates", tally.certificates},
                                 {"failures", tally.failures}}}};
}

// ---------------------------------------------------------------------------
// scan

Json cmd_scan(Options o, std::ostream& err) {
    if (o.count < 1) throw CLI::ValidationError("--count must be >= 1");
    const double tol = o.tol.value_or(kCertificateTolerance);
    if (o.gen.empty() && o.graph_file.empty() && o.corpus.empty()) o.corpus = "random";

    Json records = Json::array();
    long violations = 0;
    int index = 0;
    for (const auto& src : sources(o)) {
        const auto record = conjecture_record(*src.graph, src.seed, tol);
        Json vertices = Json::array();
        for (const auto& x : record.vertices) {
            vertices.push_back(Json{{"energy", real(x.adjacency_energy)},
                                    {"normalized_energy", real(x.normalized_energy)},
                                    {"lower", real(x.lower)},
                                    {"upper", real(x.upper)}});
        }
        Json r{{"index", index++}, {"label", src.label}, {"n", record.n}, {"m", record.m},
               {"fingerprint", hex64(record.fingerprint)}};
        if (record.seed) r["seed"] = *record.seed;
        r["vertices"] = vertices;
        r["margin"] = real(record.margin);
        r["worst_vertex"] = record.worst_vertex;
        r["verdict"] = record.violated ? "violated" : "holds";
        if (record.violated) {
            r["edges"] = edge_list(record.edges);
            ++violations;
        }
        records.push_back(r);
    }
    err << "scan: " << records.size() << " graphs, " << violations << " violation(s)\n";
    return Json{{"tolerance", tol},
                {"records", records},
                {"summary", Json{{"graphs", records.size()}, {"violations", violations}}}};
}

// ---------------------------------------------------------------------------
// curvature

Json cmd_curvature(const Options& o) {
    const Source src = single_source(o);
    const Graph& g = *src.graph;
    const auto report = ollivier_ricci(g);
    Json edges = Json::array();
    for (const auto& e : report.edges) {
        edges.push_back(Json{{"v", e.v}, {"w", e.w}, {"w1", rational(e.w1)}, {"kappa", rational(e.kappa)}});
    }
    const auto h = cheeger(g);
    const auto h_bar = dual_cheeger(g);
    Json result{{"edges", edges},
                {"k_min", rational(report.k_min)},
                {"cheeger", Json{{"value", rational(h.value)}, {"witness", h.witness}}},
                {"dual_cheeger",
                 Json{{"value", rational(h_bar.value)}, {"first", h_bar.first}, {"second", h_bar.second}}}};
    return Json{{"graph", src.descriptor}, {"result", result}};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoConvergence:
        case ErrorKind::QuadratureNoConvergence:
        case ErrorKind::NearPole:
            return kExitNumerical;
        default:
            return kExitInput;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();

    CLI::App app{"Vertex energies of graph matrices: spectral and Coulson engines, inequality certificates, "
                 "curvature and conjecture scans",
                 "lapvertex"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* cmd, bool corpus) {
        cmd->add_option("--gen", o.gen, "generator spec, family:param[,param]");
        cmd->add_option("--graph", o.graph_file, "edge-list file");
        if (corpus) cmd->add_option("--corpus", o.corpus, "default | families | random");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "write the report here instead of stdout");
        cmd->add_option("--tol", o.tol, "override the default tolerance");
    };
    auto add_random = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n_range, "vertex-count range a..b")->capture_default_str();
        cmd->add_option("--count", o.count, "number of random graphs")->capture_default_str();
        cmd->add_option("--p", o.probabilities, "edge probabilities, comma separated")->delimiter(',');
        cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
    };

    auto* energy = app.add_subcommand("energy", "per-vertex energies");
    add_source(energy, false);
    energy->add_option("--kind", o.kind, "adjacency | laplacian | normalized")->capture_default_str();
    energy->add_option("--method", o.method, "spectral | coulson | closed_form | all")->capture_default_str();
    add_common(energy);

    auto* verify = app.add_subcommand("verify", "inequality certificates");
    add_source(verify, true);
    verify->add_option("--suite", o.suite, "all | mcclelland | lower | nle | randic | geometry | csagm | chains")
        ->capture_default_str();
    add_random(verify);
    add_common(verify);

    auto* scan = app.add_subcommand("scan", "degree-scaled energy conjecture scan");
    add_source(scan, true);
    add_random(scan);
    add_common(scan);

    auto* curvature = app.add_subcommand("curvature", "Ollivier-Ricci curvature and Cheeger constants");
    add_source(curvature, false);
    add_common(curvature);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    int exit_code = kExitOk;
    Json body;
    try {
        app.parse(reversed);
        if (*energy) {
            require_one_source(o, false);
            body = cmd_energy(o);
        } else if (*verify) {
            body = cmd_verify(o, err, exit_code);
        } else if (*scan) {
            body = cmd_scan(o, err);
        } else {
            require_one_source(o, false);
            body = cmd_curvature(o);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }

    Json report;
    report["command"] = app.get_subcommands().front()->get_name();
    report["args"] = args;
    for (auto& [key, value] : body.items()) report[key] = value;
    report["tool_version"] = kToolVersion;
    report["wall_time"] = report_real(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count());
    const std::string text = report.dump(2) + "\n";

    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << text)) {
            err << "error: cannot write '" << o.out << "'\n";
            return kExitInput;
        }
    }
    return exit_code;
}

}  // namespace lapvertex
