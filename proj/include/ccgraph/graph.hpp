#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccgraph/ring.hpp"

namespace ccgraph {

/// Undirected simple graph on the elements of a ring: distinct elements cd
/// and dc are joined for every ordered pair (c, d). Stored as CSR with each
/// adjacency list sorted ascending, so equal rings always produce the same
/// bytes. Connected components are labelled in order of their smallest
/// vertex.
struct CommutationGraph {
    RingDescriptor ring;
    std::uint32_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::vector<std::uint32_t> offsets;      // vertex_count + 1 entries
    std::vector<ElementId> neighbors_flat;   // 2 * edge_count entries
    std::vector<std::uint32_t> component;    // vertex_count entries
    std::uint32_t component_count = 0;

    std::span<const ElementId> neighbors(ElementId v) const {
        return {neighbors_flat.data() + offsets[v],
                neighbors_flat.data() + offsets[v + 1]};
    }
    bool adjacent(ElementId u, ElementId v) const;
};

struct GraphBuildOptions {
    /// Worker cap for the pair sweep; 0 means one per hardware thread.
    unsigned threads = 0;
    /// Edge deduplication strategy. Auto picks the adjacency bitset for
    /// rings of at most 2^16 elements and sorted merge above that. The
    /// result never depends on the choice.
    enum class Dedup { Auto, Bitset, SortMerge };
    Dedup dedup = Dedup::Auto;
};

/// Full |R|^2 sweep over ordered pairs. Deterministic for a given ring
/// regardless of thread count.
CommutationGraph build_commutation_graph(const RingHandle& ring,
                                         const GraphBuildOptions& opts = {});

/// One-step set of a single element: every dc with cd = a, plus a itself.
/// Sorted ascending. Computed straight from the definition in O(|R|^2).
std::vector<ElementId> neighbors_one(const RingHandle& ring, ElementId a);

/// Closure of a seed set with BFS levels: members[i] reaches the seed in
/// levels[i] steps. Members are sorted by id.
struct ClosureResult {
    std::vector<ElementId> seed;
    std::vector<ElementId> members;
    std::vector<std::uint32_t> levels;
    std::uint32_t max_level = 0;

    /// Level of a member id; throws std::out_of_range for non-members.
    std::uint32_t level_of(ElementId id) const;
};

ClosureResult closure(const CommutationGraph& graph,
                      std::span<const ElementId> seed);
ClosureResult closure(const CommutationGraph& graph, ElementId seed);

/// Least number of one-step expansions after which the closure of {a} stops
/// growing; equals the largest BFS level.
std::uint32_t stabilization_depth(const CommutationGraph& graph, ElementId a);

struct ClosednessResult {
    bool closed = false;
    /// Ordered pair (c, d) with cd in the set but dc outside it; the first
    /// such pair in row-major scan order.
    std::optional<std::pair<ElementId, ElementId>> counterexample;
};

/// Direct definition check; does not need a prebuilt graph.
ClosednessResult is_commutatively_closed(const RingHandle& ring,
                                         std::span<const ElementId> members);

} // namespace ccgraph
