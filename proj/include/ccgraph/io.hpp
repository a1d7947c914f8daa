#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ccgraph/graph.hpp"
#include "ccgraph/ring.hpp"

namespace ccgraph {

enum class ExportFormat { Dot, Json, Csv, EdgeList };

std::optional<ExportFormat> parse_format(std::string_view name);

/// Serialize the graph. Output is byte-deterministic: vertices ascending,
/// each undirected edge written once as "u v" (or u,v / [u,v]) with u < v,
/// edges sorted. The ring handle supplies decoded vertex labels for DOT.
std::string export_graph(const CommutationGraph& graph, const RingHandle& ring,
                         ExportFormat format);

/// The EDGELIST text (also the cache format): a header line
/// "ccgraph v1 <spec> <vertex-count> <edge-count>" then one "u v" line per
/// edge.
std::string to_edgelist(const CommutationGraph& graph);

/// Parse EDGELIST text; components are recomputed, so a round trip through
/// to_edgelist reproduces the graph exactly. Throws IoError on malformed
/// input, including a header that disagrees with the edge lines.
CommutationGraph parse_edgelist(std::string_view text);

/// Write via a temporary file plus rename so a crash never leaves a partial
/// file at the target path. Throws IoError on failure.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// On-disk graph cache, keyed by the canonical ring spec. A cache entry
/// whose header does not match the requested ring (or that fails to parse)
/// is treated as a miss with a warning on stderr; it is never trusted.
class GraphCache {
public:
    /// Disabled when dir is empty.
    explicit GraphCache(std::optional<std::filesystem::path> dir);

    /// Explicit dir wins; otherwise the CCGRAPH_CACHE environment variable;
    /// otherwise disabled.
    static GraphCache from_environment(
        std::optional<std::filesystem::path> explicit_dir);

    bool enabled() const { return dir_.has_value(); }
    std::filesystem::path path_for(const RingDescriptor& ring) const;

    std::optional<CommutationGraph> load(const RingDescriptor& ring) const;
    /// Best effort: failures warn on stderr but do not throw.
    void store(const CommutationGraph& graph) const;

private:
    std::optional<std::filesystem::path> dir_;
};

} // namespace ccgraph
