// ccgraph: build commutation graphs of finite rings, inspect closures and
// distances, and run the structural check suites.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccgraph/analytics.hpp"
#include "ccgraph/errors.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/io.hpp"
#include "ccgraph/matrix.hpp"
#include "ccgraph/ring.hpp"
#include "ccgraph/verifier.hpp"

namespace {

using ccgraph::ElementId;
using json = nlohmann::ordered_json;

constexpr int kExitSpec = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    std::string ring_spec;
    unsigned threads = 0;
    bool allow_large = false;
    std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_cache = true) {
    cmd->add_option("--ring", opts.ring_spec,
                    "Ring spec, e.g. Z(12), GF(8), M(2,GF(3)), Z(4)xM(2,GF(2))")
        ->required();
    cmd->add_option("--threads", opts.threads,
                    "Worker cap for parallel sweeps (0 = all cores)");
    cmd->add_flag("--allow-large", opts.allow_large,
                  "Lift the default ring size guard of 2^20 elements");
    if (with_cache)
        cmd->add_option("--cache-dir", opts.cache_dir,
                        "Graph cache directory (or set CCGRAPH_CACHE)");
}

ccgraph::RingPtr make_ring(const CommonOpts& opts) {
    ccgraph::BuildOptions b;
    b.allow_large = opts.allow_large;
    return ccgraph::build_ring(opts.ring_spec, b);
}

ccgraph::CommutationGraph make_graph(const ccgraph::RingHandle& ring,
                                     const CommonOpts& opts) {
    std::optional<std::filesystem::path> dir;
    if (!opts.cache_dir.empty()) dir = opts.cache_dir;
    ccgraph::GraphCache cache = ccgraph::GraphCache::from_environment(dir);
    if (cache.enabled())
        if (auto cached = cache.load(ring.descriptor())) return *std::move(cached);
    ccgraph::GraphBuildOptions g;
    g.threads = opts.threads;
    ccgraph::CommutationGraph graph = ccgraph::build_commutation_graph(ring, g);
    if (cache.enabled()) cache.store(graph);
    return graph;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        ccgraph::atomic_write_file(out_path, text);
}

ElementId checked_element(const ccgraph::RingHandle& ring, std::uint64_t id) {
    if (id >= ring.size())
        throw std::out_of_range("element id " + std::to_string(id) +
                                " out of range for " +
                                ring.descriptor().render() + " (size " +
                                std::to_string(ring.size()) + ")");
    return static_cast<ElementId>(id);
}

int cmd_graph(const CommonOpts& opts, const std::string& format,
              const std::string& out_path) {
    auto ring = make_ring(opts);
    ccgraph::CommutationGraph graph = make_graph(*ring, opts);
    auto fmt = ccgraph::parse_format(format);
    emit(ccgraph::export_graph(graph, *ring, *fmt), out_path);
    return 0;
}

int cmd_closure(const CommonOpts& opts, std::uint64_t element, bool decode,
                const std::string& out_path) {
    auto ring = make_ring(opts);
    ElementId seed = checked_element(*ring, element);
    ccgraph::CommutationGraph graph = make_graph(*ring, opts);
    ccgraph::ClosureResult cl = ccgraph::closure(graph, seed);

    json j;
    j["ring"] = ring->descriptor().render();
    j["seed"] = seed;
    if (decode) j["seed_render"] = ring->render_element(seed);
    j["size"] = cl.members.size();
    j["max_level"] = cl.max_level;
    j["members"] = cl.members;
    j["levels"] = cl.levels;
    if (decode) {
        json renders = json::array();
        for (ElementId m : cl.members) renders.push_back(ring->render_element(m));
        j["renders"] = std::move(renders);
    }
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_analyze(const CommonOpts& opts, bool want_diameter, bool want_girth,
                const std::vector<std::uint64_t>& distance_pair,
                const std::string& out_path) {
    auto ring = make_ring(opts);
    ccgraph::CommutationGraph graph = make_graph(*ring, opts);

    // With no explicit request, report the two headline quantities.
    bool defaulted = !want_diameter && !want_girth && distance_pair.empty();

    json j;
    j["ring"] = ring->descriptor().render();
    if (want_diameter || defaulted)
        j["diameter"] = ccgraph::ring_diameter(graph, opts.threads);
    if (want_girth || defaulted) {
        auto g = ccgraph::ring_girth(graph, opts.threads);
        j["girth"] = g ? json(*g) : json(nullptr);
    }
    if (!distance_pair.empty()) {
        ElementId a = checked_element(*ring, distance_pair[0]);
        ElementId b = checked_element(*ring, distance_pair[1]);
        auto d = ccgraph::distance(graph, a, b);
        j["distance"] = {{"from", a},
                         {"to", b},
                         {"value", d ? json(*d) : json(nullptr)}};
    }
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& rings,
               std::uint64_t seed, unsigned threads, bool allow_large,
               const std::string& json_path) {
    auto names = ccgraph::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "' (available:";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << ")\n";
        return kExitSpec;
    }

    ccgraph::SuiteOptions opts;
    opts.seed = seed;
    opts.threads = threads;
    opts.allow_large = allow_large;
    ccgraph::Report report = ccgraph::run_suite(suite, rings, opts);

    for (const ccgraph::CheckResult& r : report.results) {
        const char* tag = r.status == ccgraph::CheckStatus::Pass   ? "PASS"
                          : r.status == ccgraph::CheckStatus::Fail ? "FAIL"
                                                                   : "SKIP";
        std::cout << tag << "  " << r.check_id << "  " << r.ring;
        if (r.status == ccgraph::CheckStatus::Fail)
            std::cout << "  expected=" << r.expected.dump()
                      << " actual=" << r.actual.dump()
                      << " witness=" << r.witness.dump();
        else if (r.status == ccgraph::CheckStatus::Skipped &&
                 r.witness.contains("reason"))
            std::cout << "  (" << r.witness["reason"].get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << "suite " << report.suite << ": pass=" << report.passed
              << " fail=" << report.failed << " skip=" << report.skipped
              << "\n";

    if (!json_path.empty())
        ccgraph::atomic_write_file(json_path,
                                   ccgraph::report_to_json(report).dump(2) +
                                       "\n");
    return report.failed == 0 ? 0 : 1;
}

int cmd_jordan(const CommonOpts& opts, std::uint64_t element, bool decode,
               const std::string& out_path) {
    auto ring = make_ring(opts);
    if (!ring->is_matrix_ring()) {
        std::cerr << "error: jordan needs a matrix ring, got "
                  << ring->descriptor().render() << "\n";
        return kExitSpec;
    }
    ElementId id = checked_element(*ring, element);
    const ccgraph::FiniteField& f = *ring->base_field();
    ccgraph::MatrixRep m = ring->decode_matrix(id);

    json j;
    j["ring"] = ring->descriptor().render();
    j["element"] = id;
    if (decode) j["render"] = ccgraph::render_matrix(f, m);
    json rows = json::array();
    for (std::uint32_t i = 0; i < m.size; ++i) {
        json row = json::array();
        for (std::uint32_t c = 0; c < m.size; ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);

    auto nu = ccgraph::nilpotency_index(f, m);
    j["nilpotent"] = nu.has_value();
    j["nilpotency_index"] = nu ? json(*nu) : json(nullptr);
    if (nu) {
        ccgraph::JordanPartition part = ccgraph::jordan_partition(f, m);
        j["jordan_partition"] = part.blocks;
    } else {
        j["jordan_partition"] = nullptr;
    }

    ccgraph::CharPoly cp = ccgraph::char_poly(f, m);
    j["char_poly"] = cp.coefficients;
    j["char_poly_render"] = ccgraph::render_char_poly(f, cp);

    ccgraph::FittingDecomposition fit = ccgraph::fitting_decomposition(f, m);
    j["fitting"] = {{"invertible_size", fit.invertible_part.size},
                    {"nilpotent_size", fit.nilpotent_part.size}};

    emit(j.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commutation graphs of finite rings: construction, closure "
                 "analysis and structural checks"};
    app.require_subcommand(1);
    int rc = 0;

    // graph
    CommonOpts graph_opts;
    std::string graph_format = "json";
    std::string graph_out;
    auto* graph_cmd =
        app.add_subcommand("graph", "Build the graph and export it");
    add_common(graph_cmd, graph_opts);
    graph_cmd
        ->add_option("--format", graph_format,
                     "Export format: dot, json, csv, edgelist")
        ->check(CLI::IsMember({"dot", "json", "csv", "edgelist"}));
    graph_cmd->add_option("--out", graph_out,
                          "Output file (stdout when omitted)");
    graph_cmd->callback(
        [&] { rc = cmd_graph(graph_opts, graph_format, graph_out); });

    // closure
    CommonOpts closure_opts;
    std::uint64_t closure_element = 0;
    bool closure_decode = false;
    std::string closure_out;
    auto* closure_cmd = app.add_subcommand(
        "closure", "Closure of one element with its levels");
    add_common(closure_cmd, closure_opts);
    closure_cmd->add_option("--element", closure_element, "Element id")
        ->required();
    closure_cmd->add_flag("--decode", closure_decode,
                          "Include human-readable renderings");
    closure_cmd->add_option("--out", closure_out,
                            "Output file (stdout when omitted)");
    closure_cmd->callback([&] {
        rc = cmd_closure(closure_opts, closure_element, closure_decode,
                         closure_out);
    });

    // analyze
    CommonOpts analyze_opts;
    bool analyze_diameter = false, analyze_girth = false;
    std::vector<std::uint64_t> analyze_distance;
    std::string analyze_out;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "Diameter, girth and distances");
    add_common(analyze_cmd, analyze_opts);
    analyze_cmd->add_flag("--diameter", analyze_diameter,
                          "Greatest finite distance in the graph");
    analyze_cmd->add_flag("--girth", analyze_girth,
                          "Shortest cycle length (null when acyclic)");
    analyze_cmd
        ->add_option("--distance", analyze_distance,
                     "Two element ids; null when not connected")
        ->expected(2);
    analyze_cmd->add_option("--out", analyze_out,
                            "Output file (stdout when omitted)");
    analyze_cmd->callback([&] {
        rc = cmd_analyze(analyze_opts, analyze_diameter, analyze_girth,
                         analyze_distance, analyze_out);
    });

    // verify
    std::string verify_suite;
    std::vector<std::string> verify_rings;
    std::uint64_t verify_seed = 0;
    unsigned verify_threads = 0;
    bool verify_allow_large = false;
    std::string verify_json;
    auto* verify_cmd =
        app.add_subcommand("verify", "Run a structural check suite");
    verify_cmd
        ->add_option("--suite", verify_suite,
                     "Suite name: paper-core or identities")
        ->required();
    verify_cmd->add_option("--ring", verify_rings,
                           "Ring spec (repeatable; suite defaults when "
                           "omitted)");
    verify_cmd->add_option("--seed", verify_seed, "Base seed for sampling");
    verify_cmd->add_option("--threads", verify_threads,
                           "Worker cap (0 = all cores)");
    verify_cmd->add_flag("--allow-large", verify_allow_large,
                         "Lift the ring size guard");
    verify_cmd->add_option("--json", verify_json, "Write the report here");
    verify_cmd->callback([&] {
        rc = cmd_verify(verify_suite, verify_rings, verify_seed,
                        verify_threads, verify_allow_large, verify_json);
    });

    // jordan
    CommonOpts jordan_opts;
    std::uint64_t jordan_element = 0;
    bool jordan_decode = false;
    std::string jordan_out;
    auto* jordan_cmd = app.add_subcommand(
        "jordan", "Nilpotency, Jordan partition, characteristic polynomial "
                  "and Fitting split of a matrix element");
    add_common(jordan_cmd, jordan_opts, /*with_cache=*/false);
    jordan_cmd->add_option("--element", jordan_element, "Element id")
        ->required();
    jordan_cmd->add_flag("--decode", jordan_decode,
                         "Include the matrix rendering");
    jordan_cmd->add_option("--out", jordan_out,
                           "Output file (stdout when omitted)");
    jordan_cmd->callback([&] {
        rc = cmd_jordan(jordan_opts, jordan_element, jordan_decode, jordan_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ccgraph::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const ccgraph::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const ccgraph::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
