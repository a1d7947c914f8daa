#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccgraph/graph.hpp"

namespace ccgraph {

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

/// BFS distances from src; kUnreachable marks other components.
std::vector<std::uint32_t> bfs_distances(const CommutationGraph& graph,
                                         ElementId src);

/// Shortest path length between a and b; empty when they are in different
/// components.
std::optional<std::uint32_t> distance(const CommutationGraph& graph,
                                      ElementId a, ElementId b);

/// Greatest distance from a within its component.
std::uint32_t eccentricity(const CommutationGraph& graph, ElementId a);

/// Diameter of the component containing a.
std::uint32_t class_diameter(const CommutationGraph& graph, ElementId a);

/// Greatest finite distance over the whole graph: the maximum of the
/// component diameters. All-pairs BFS, parallel across sources.
std::uint32_t ring_diameter(const CommutationGraph& graph,
                            unsigned threads = 0);

/// Shortest cycle length within the component containing a; empty when the
/// component is acyclic.
std::optional<std::uint32_t> class_girth(const CommutationGraph& graph,
                                         ElementId a);

/// Shortest cycle length anywhere in the graph; empty when the whole graph
/// is acyclic.
std::optional<std::uint32_t> ring_girth(const CommutationGraph& graph,
                                        unsigned threads = 0);

/// Eccentricity of every vertex, computed with one BFS per vertex.
std::vector<std::uint32_t> all_eccentricities(const CommutationGraph& graph,
                                              unsigned threads = 0);

} // namespace ccgraph
