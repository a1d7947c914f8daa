#include "ccgraph/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ccgraph {

namespace {

void check_vertex(const CommutationGraph& graph, ElementId v) {
    if (v >= graph.vertex_count)
        throw std::out_of_range("vertex id out of range");
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// BFS from src into dist (preallocated, reset here); returns the largest
// level reached.
std::uint32_t bfs_into(const CommutationGraph& graph, ElementId src,
                       std::vector<std::uint32_t>& dist,
                       std::vector<ElementId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[src] = 0;
    queue.push_back(src);
    std::uint32_t max_level = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElementId u = queue[head];
        std::uint32_t du = dist[u];
        for (ElementId w : graph.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = du + 1;
                max_level = du + 1;
                queue.push_back(w);
            }
        }
    }
    return max_level;
}

// Max of fn(v) over vertices with pred(v), parallel across sources.
std::uint32_t max_over_sources(const CommutationGraph& graph, unsigned threads,
                               const std::function<bool(ElementId)>& pred) {
    unsigned workers = resolve_threads(threads);
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint32_t> best{0};
    auto work = [&] {
        std::vector<std::uint32_t> dist(graph.vertex_count);
        std::vector<ElementId> queue;
        queue.reserve(graph.vertex_count);
        for (;;) {
            std::uint32_t v = next.fetch_add(1);
            if (v >= graph.vertex_count) return;
            if (!pred(v)) continue;
            std::uint32_t ecc = bfs_into(graph, v, dist, queue);
            std::uint32_t cur = best.load();
            while (ecc > cur && !best.compare_exchange_weak(cur, ecc)) {
            }
        }
    };
    if (workers <= 1 || graph.vertex_count < 64) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return best.load();
}

} // namespace

std::vector<std::uint32_t> bfs_distances(const CommutationGraph& graph,
                                         ElementId src) {
    check_vertex(graph, src);
    std::vector<std::uint32_t> dist(graph.vertex_count);
    std::vector<ElementId> queue;
    bfs_into(graph, src, dist, queue);
    return dist;
}

std::optional<std::uint32_t> distance(const CommutationGraph& graph,
                                      ElementId a, ElementId b) {
    check_vertex(graph, a);
    check_vertex(graph, b);
    if (graph.component[a] != graph.component[b]) return std::nullopt;
    auto dist = bfs_distances(graph, a);
    return dist[b];
}

std::uint32_t eccentricity(const CommutationGraph& graph, ElementId a) {
    check_vertex(graph, a);
    std::vector<std::uint32_t> dist(graph.vertex_count);
    std::vector<ElementId> queue;
    return bfs_into(graph, a, dist, queue);
}

std::uint32_t class_diameter(const CommutationGraph& graph, ElementId a) {
    check_vertex(graph, a);
    std::uint32_t comp = graph.component[a];
    return max_over_sources(graph, 0, [&](ElementId v) {
        return graph.component[v] == comp;
    });
}

std::uint32_t ring_diameter(const CommutationGraph& graph, unsigned threads) {
    if (graph.vertex_count == 0) return 0;
    return max_over_sources(graph, threads, [](ElementId) { return true; });
}

std::vector<std::uint32_t> all_eccentricities(const CommutationGraph& graph,
                                              unsigned threads) {
    unsigned workers = resolve_threads(threads);
    std::vector<std::uint32_t> out(graph.vertex_count, 0);
    std::atomic<std::uint32_t> next{0};
    auto work = [&] {
        std::vector<std::uint32_t> dist(graph.vertex_count);
        std::vector<ElementId> queue;
        queue.reserve(graph.vertex_count);
        for (;;) {
            std::uint32_t v = next.fetch_add(1);
            if (v >= graph.vertex_count) return;
            out[v] = bfs_into(graph, v, dist, queue);
        }
    };
    if (workers <= 1 || graph.vertex_count < 64) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

namespace {

// Shortest cycle through the BFS tree of one root: for every non-tree edge
// (u, w) seen from u with w already reached and w not u's parent, the walk
// root->u, edge (u, w), w->root closes a cycle of length at most
// dist[u] + dist[w] + 1. Scanning every root makes the bound tight, and any
// graph with a cycle yields a finite answer.
std::uint32_t girth_from_root(const CommutationGraph& graph, ElementId root,
                              std::vector<std::uint32_t>& dist,
                              std::vector<ElementId>& parent,
                              std::vector<ElementId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    std::uint32_t best = kUnreachable;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElementId u = queue[head];
        for (ElementId w : graph.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (w != parent[u]) {
                std::uint32_t cand = dist[u] + dist[w] + 1;
                best = std::min(best, cand);
            }
        }
    }
    return best;
}

std::optional<std::uint32_t> girth_over(const CommutationGraph& graph,
                                        const std::vector<ElementId>& roots,
                                        unsigned threads) {
    unsigned workers = resolve_threads(threads);
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint32_t> best{kUnreachable};
    auto work = [&] {
        std::vector<std::uint32_t> dist(graph.vertex_count);
        std::vector<ElementId> parent(graph.vertex_count);
        std::vector<ElementId> queue;
        queue.reserve(graph.vertex_count);
        for (;;) {
            if (best.load() == 3) return; // no shorter cycle exists
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) return;
            std::uint32_t g = girth_from_root(graph, roots[i], dist, parent, queue);
            std::uint32_t cur = best.load();
            while (g < cur && !best.compare_exchange_weak(cur, g)) {
            }
        }
    };
    if (workers <= 1 || roots.size() < 64) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::uint32_t g = best.load();
    if (g == kUnreachable) return std::nullopt;
    return g;
}

} // namespace

std::optional<std::uint32_t> class_girth(const CommutationGraph& graph,
                                         ElementId a) {
    check_vertex(graph, a);
    std::uint32_t comp = graph.component[a];
    std::vector<ElementId> roots;
    for (std::uint32_t v = 0; v < graph.vertex_count; ++v)
        if (graph.component[v] == comp) roots.push_back(v);
    return girth_over(graph, roots, 0);
}

std::optional<std::uint32_t> ring_girth(const CommutationGraph& graph,
                                        unsigned threads) {
    std::vector<ElementId> roots(graph.vertex_count);
    for (std::uint32_t v = 0; v < graph.vertex_count; ++v) roots[v] = v;
    return girth_over(graph, roots, threads);
}

} // namespace ccgraph
