#include "ccgraph/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "ccgraph/analytics.hpp"
#include "ccgraph/errors.hpp"
#include "ccgraph/rng.hpp"

namespace ccgraph {

std::optional<ExportFormat> parse_format(std::string_view name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    if (name == "csv") return ExportFormat::Csv;
    if (name == "edgelist") return ExportFormat::EdgeList;
    return std::nullopt;
}

namespace {

// Edges as (u, v) with u < v, ascending; the canonical order everywhere.
std::vector<std::pair<ElementId, ElementId>> sorted_edges(
    const CommutationGraph& g) {
    std::vector<std::pair<ElementId, ElementId>> out;
    out.reserve(g.edge_count);
    for (std::uint32_t u = 0; u < g.vertex_count; ++u)
        for (ElementId v : g.neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string escape_dot(std::string label) {
    std::string out;
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string export_dot(const CommutationGraph& g, const RingHandle& ring) {
    std::string out = "graph \"" + escape_dot(g.ring.render()) + "\" {\n";
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        std::string label = ring.render_element(v);
        if (label.size() > 40) label.resize(40);
        out += "  n" + std::to_string(v) + " [label=\"" + escape_dot(label) +
               "\"];\n";
    }
    for (auto [u, v] : sorted_edges(g))
        out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string export_csv(const CommutationGraph& g) {
    std::string out = "u,v\n";
    for (auto [u, v] : sorted_edges(g))
        out += std::to_string(u) + "," + std::to_string(v) + "\n";
    return out;
}

std::string export_json(const CommutationGraph& g) {
    nlohmann::ordered_json j;
    j["ring"] = g.ring.render();
    j["vertex_count"] = g.vertex_count;
    j["edge_count"] = g.edge_count;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : sorted_edges(g))
        edges.push_back(nlohmann::ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    j["component_count"] = g.component_count;
    j["component"] = g.component;

    // Per-component summary, labelled in component order: a representative
    // (the smallest member), size, diameter and girth (null when acyclic).
    std::vector<ElementId> rep(g.component_count, 0);
    std::vector<std::uint32_t> size(g.component_count, 0);
    for (ElementId v = g.vertex_count; v-- > 0;) rep[g.component[v]] = v;
    for (ElementId v = 0; v < g.vertex_count; ++v) ++size[g.component[v]];
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (std::uint32_t c = 0; c < g.component_count; ++c) {
        nlohmann::ordered_json item;
        item["representative"] = rep[c];
        item["size"] = size[c];
        item["diameter"] = class_diameter(g, rep[c]);
        auto girth = class_girth(g, rep[c]);
        item["girth"] = girth ? nlohmann::ordered_json(*girth)
                              : nlohmann::ordered_json(nullptr);
        comps.push_back(std::move(item));
    }
    j["components"] = std::move(comps);
    return j.dump(2) + "\n";
}

} // namespace

std::string to_edgelist(const CommutationGraph& g) {
    std::string out = "ccgraph v1 " + g.ring.render() + " " +
                      std::to_string(g.vertex_count) + " " +
                      std::to_string(g.edge_count) + "\n";
    for (auto [u, v] : sorted_edges(g))
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string export_graph(const CommutationGraph& graph, const RingHandle& ring,
                         ExportFormat format) {
    switch (format) {
    case ExportFormat::Dot:
        return export_dot(graph, ring);
    case ExportFormat::Json:
        return export_json(graph);
    case ExportFormat::Csv:
        return export_csv(graph);
    case ExportFormat::EdgeList:
        return to_edgelist(graph);
    }
    throw std::logic_error("unreachable");
}

namespace {

void rebuild_adjacency(CommutationGraph& g,
                       const std::vector<std::pair<ElementId, ElementId>>& edges) {
    g.offsets.assign(std::size_t(g.vertex_count) + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
    }
    for (std::uint32_t v = 0; v < g.vertex_count; ++v)
        g.offsets[v + 1] += g.offsets[v];
    g.neighbors_flat.resize(g.offsets[g.vertex_count]);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (auto [u, v] : edges) {
        g.neighbors_flat[cursor[u]++] = v;
        g.neighbors_flat[cursor[v]++] = u;
    }
    for (std::uint32_t v = 0; v < g.vertex_count; ++v)
        std::sort(g.neighbors_flat.begin() + g.offsets[v],
                  g.neighbors_flat.begin() + g.offsets[v + 1]);

    g.component.assign(g.vertex_count, UINT32_MAX);
    std::uint32_t label = 0;
    std::vector<ElementId> stack;
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        if (g.component[v] != UINT32_MAX) continue;
        g.component[v] = label;
        stack.push_back(v);
        while (!stack.empty()) {
            ElementId u = stack.back();
            stack.pop_back();
            for (ElementId w : g.neighbors(u))
                if (g.component[w] == UINT32_MAX) {
                    g.component[w] = label;
                    stack.push_back(w);
                }
        }
        ++label;
    }
    g.component_count = label;
}

std::uint64_t parse_u64_or_throw(std::string_view token, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw IoError(std::string("malformed ") + what + " in edge list");
    return value;
}

} // namespace

CommutationGraph parse_edgelist(std::string_view text) {
    std::size_t line_start = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        if (line_start >= text.size()) return std::nullopt;
        std::size_t end = text.find('\n', line_start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(line_start, end - line_start);
        line_start = end + 1;
        return line;
    };

    auto header = next_line();
    if (!header) throw IoError("empty edge list");
    std::istringstream hs{std::string(*header)};
    std::string magic, version, spec;
    std::uint64_t vertex_count = 0, edge_count = 0;
    if (!(hs >> magic >> version >> spec >> vertex_count >> edge_count) ||
        magic != "ccgraph" || version != "v1")
        throw IoError("bad edge list header");
    std::string trailing;
    if (hs >> trailing) throw IoError("bad edge list header");

    CommutationGraph g;
    g.ring = parse_ring_spec(spec);
    if (g.ring.element_count() != vertex_count)
        throw IoError("edge list vertex count disagrees with the ring spec");
    g.vertex_count = static_cast<std::uint32_t>(vertex_count);
    g.edge_count = edge_count;
    if (edge_count > vertex_count * (vertex_count - 1) / 2)
        throw IoError("edge count in header exceeds the simple-graph maximum");

    std::vector<std::pair<ElementId, ElementId>> edges;
    edges.reserve(edge_count);
    std::uint64_t prev_key = 0;
    bool first = true;
    for (auto line = next_line(); line; line = next_line()) {
        if (line->empty() && line_start >= text.size()) break;
        std::size_t space = line->find(' ');
        if (space == std::string_view::npos)
            throw IoError("malformed edge line");
        std::uint64_t u = parse_u64_or_throw(line->substr(0, space), "vertex");
        std::uint64_t v = parse_u64_or_throw(line->substr(space + 1), "vertex");
        if (u >= vertex_count || v >= vertex_count)
            throw IoError("edge vertex out of range");
        if (u >= v) throw IoError("edges must satisfy u < v");
        std::uint64_t key = (u << 32) | v;
        if (!first && key <= prev_key)
            throw IoError("edges must be strictly ascending");
        first = false;
        prev_key = key;
        edges.emplace_back(static_cast<ElementId>(u), static_cast<ElementId>(v));
    }
    if (edges.size() != edge_count)
        throw IoError("edge count disagrees with the header");

    rebuild_adjacency(g, edges);
    return g;
}

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("failed to move temporary file onto " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string content{std::istreambuf_iterator<char>(in),
                        std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("failed reading " + path.string());
    return content;
}

// ---------------------------------------------------------------------------
// GraphCache

GraphCache::GraphCache(std::optional<std::filesystem::path> dir)
    : dir_(std::move(dir)) {}

GraphCache GraphCache::from_environment(
    std::optional<std::filesystem::path> explicit_dir) {
    if (explicit_dir) return GraphCache(std::move(explicit_dir));
    if (const char* env = std::getenv("CCGRAPH_CACHE"); env && *env)
        return GraphCache(std::filesystem::path(env));
    return GraphCache(std::nullopt);
}

std::filesystem::path GraphCache::path_for(const RingDescriptor& ring) const {
    if (!dir_) throw std::logic_error("cache is disabled");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(ring.render())));
    return *dir_ / (std::string(buf) + ".edgelist");
}

std::optional<CommutationGraph> GraphCache::load(
    const RingDescriptor& ring) const {
    if (!dir_) return std::nullopt;
    std::filesystem::path path = path_for(ring);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
        CommutationGraph g = parse_edgelist(read_file(path));
        if (!(g.ring == ring)) {
            std::cerr << "warning: cache entry " << path.string()
                      << " is for a different ring; rebuilding\n";
            return std::nullopt;
        }
        return g;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unusable cache entry " << path.string()
                  << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void GraphCache::store(const CommutationGraph& graph) const {
    if (!dir_) return;
    try {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        atomic_write_file(path_for(graph.ring), to_edgelist(graph));
    } catch (const std::exception& e) {
        std::cerr << "warning: could not store cache entry: " << e.what()
                  << "\n";
    }
}

} // namespace ccgraph
