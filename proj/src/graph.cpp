#include "ccgraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <new>
#include <stdexcept>
#include <thread>

#include "ccgraph/errors.hpp"

namespace ccgraph {

bool CommutationGraph::adjacent(ElementId u, ElementId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs body(worker, begin, end) over dynamic row chunks. Early rows of the
// triangular sweep are longer, so static splits would load-balance badly.
// Worker exceptions are captured and rethrown after the join.
void parallel_rows(
    unsigned workers, std::uint32_t n,
    const std::function<void(unsigned, std::uint32_t, std::uint32_t)>& body) {
    std::atomic<std::uint32_t> next{0};
    std::uint32_t chunk = std::max<std::uint32_t>(1, n / (workers * 32 + 1));
    std::mutex err_mutex;
    std::exception_ptr err;
    auto work = [&](unsigned widx) {
        try {
            for (;;) {
                std::uint32_t begin = next.fetch_add(chunk);
                if (begin >= n) return;
                body(widx, begin, std::min<std::uint32_t>(n, begin + chunk));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mutex);
            if (!err) err = std::current_exception();
            next.store(n);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
}

void finish_components(CommutationGraph& g) {
    std::uint32_t n = g.vertex_count;
    g.component.assign(n, UINT32_MAX);
    std::uint32_t label = 0;
    std::vector<ElementId> stack;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (g.component[v] != UINT32_MAX) continue;
        g.component[v] = label;
        stack.push_back(v);
        while (!stack.empty()) {
            ElementId u = stack.back();
            stack.pop_back();
            for (ElementId w : g.neighbors(u)) {
                if (g.component[w] == UINT32_MAX) {
                    g.component[w] = label;
                    stack.push_back(w);
                }
            }
        }
        ++label;
    }
    g.component_count = label;
}

CommutationGraph build_bitset(const RingHandle& ring, unsigned workers) {
    std::uint32_t n = static_cast<std::uint32_t>(ring.size());
    std::size_t words_per_row = (std::size_t(n) + 63) / 64;
    std::vector<std::uint64_t> bits;
    try {
        bits.assign(words_per_row * n, 0);
    } catch (const std::bad_alloc&) {
        throw Error("memory budget exceeded while building the graph");
    }

    parallel_rows(workers, n, [&](unsigned, std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t c = begin; c < end; ++c) {
            for (std::uint32_t d = c; d < n; ++d) {
                ElementId a = ring.mul_raw(c, d);
                ElementId b = ring.mul_raw(d, c);
                if (a == b) continue;
                std::atomic_ref<std::uint64_t> w1(
                    bits[std::size_t(a) * words_per_row + b / 64]);
                w1.fetch_or(std::uint64_t(1) << (b % 64),
                            std::memory_order_relaxed);
                std::atomic_ref<std::uint64_t> w2(
                    bits[std::size_t(b) * words_per_row + a / 64]);
                w2.fetch_or(std::uint64_t(1) << (a % 64),
                            std::memory_order_relaxed);
            }
        }
    });

    CommutationGraph g;
    g.ring = ring.descriptor();
    g.vertex_count = n;
    g.offsets.assign(std::size_t(n) + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t degree = 0;
        for (std::size_t w = 0; w < words_per_row; ++w)
            degree += static_cast<std::uint32_t>(
                std::popcount(bits[std::size_t(v) * words_per_row + w]));
        g.offsets[v + 1] = g.offsets[v] + degree;
    }
    g.neighbors_flat.resize(g.offsets[n]);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t out = g.offsets[v];
        for (std::size_t w = 0; w < words_per_row; ++w) {
            std::uint64_t word = bits[std::size_t(v) * words_per_row + w];
            while (word != 0) {
                unsigned bit = std::countr_zero(word);
                g.neighbors_flat[out++] =
                    static_cast<ElementId>(w * 64 + bit);
                word &= word - 1;
            }
        }
    }
    g.edge_count = g.neighbors_flat.size() / 2;
    finish_components(g);
    return g;
}

CommutationGraph build_sort_merge(const RingHandle& ring, unsigned workers) {
    std::uint32_t n = static_cast<std::uint32_t>(ring.size());
    // Per-worker buffers of packed (min,max) pairs, deduplicated globally
    // after the sweep, so worker count and scheduling cannot change the
    // result. Oversized buffers are compacted in place as they fill.
    std::vector<std::vector<std::uint64_t>> locals(workers);
    std::vector<std::size_t> flush_limit(workers, std::size_t(1) << 22);

    try {
        parallel_rows(workers, n,
                      [&](unsigned widx, std::uint32_t begin, std::uint32_t end) {
            auto& local = locals[widx];
            for (std::uint32_t c = begin; c < end; ++c) {
                for (std::uint32_t d = c; d < n; ++d) {
                    ElementId a = ring.mul_raw(c, d);
                    ElementId b = ring.mul_raw(d, c);
                    if (a == b) continue;
                    std::uint64_t key =
                        (std::uint64_t(std::min(a, b)) << 32) | std::max(a, b);
                    local.push_back(key);
                    if (local.size() >= flush_limit[widx]) {
                        std::sort(local.begin(), local.end());
                        local.erase(std::unique(local.begin(), local.end()),
                                    local.end());
                        if (local.size() * 2 > flush_limit[widx])
                            flush_limit[widx] *= 2;
                    }
                }
            }
        });
    } catch (const std::bad_alloc&) {
        throw Error("memory budget exceeded while building the graph");
    }

    std::vector<std::uint64_t> edges;
    for (auto& buf : locals) {
        edges.insert(edges.end(), buf.begin(), buf.end());
        buf.clear();
        buf.shrink_to_fit();
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    CommutationGraph g;
    g.ring = ring.descriptor();
    g.vertex_count = n;
    g.edge_count = edges.size();
    g.offsets.assign(std::size_t(n) + 1, 0);
    for (std::uint64_t e : edges) {
        ++g.offsets[(e >> 32) + 1];
        ++g.offsets[(e & 0xffffffffu) + 1];
    }
    for (std::uint32_t v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors_flat.resize(g.offsets[n]);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (std::uint64_t e : edges) {
        ElementId u = static_cast<ElementId>(e >> 32);
        ElementId v = static_cast<ElementId>(e & 0xffffffffu);
        g.neighbors_flat[cursor[u]++] = v;
        g.neighbors_flat[cursor[v]++] = u;
    }
    for (std::uint32_t v = 0; v < n; ++v)
        std::sort(g.neighbors_flat.begin() + g.offsets[v],
                  g.neighbors_flat.begin() + g.offsets[v + 1]);
    finish_components(g);
    return g;
}

} // namespace

CommutationGraph build_commutation_graph(const RingHandle& ring,
                                         const GraphBuildOptions& opts) {
    unsigned workers = resolve_threads(opts.threads);
    bool bitset;
    switch (opts.dedup) {
    case GraphBuildOptions::Dedup::Bitset:
        bitset = true;
        break;
    case GraphBuildOptions::Dedup::SortMerge:
        bitset = false;
        break;
    default:
        bitset = ring.size() <= (std::uint64_t(1) << 16);
        break;
    }
    return bitset ? build_bitset(ring, workers)
                  : build_sort_merge(ring, workers);
}

std::vector<ElementId> neighbors_one(const RingHandle& ring, ElementId a) {
    if (a >= ring.size())
        throw std::out_of_range("element id out of range");
    std::uint32_t n = static_cast<std::uint32_t>(ring.size());
    std::vector<bool> seen(n, false);
    seen[a] = true;
    for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d)
            if (ring.mul_raw(c, d) == a) seen[ring.mul_raw(d, c)] = true;
    std::vector<ElementId> out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::uint32_t ClosureResult::level_of(ElementId id) const {
    auto it = std::lower_bound(members.begin(), members.end(), id);
    if (it == members.end() || *it != id)
        throw std::out_of_range("id is not in the closure");
    return levels[static_cast<std::size_t>(it - members.begin())];
}

ClosureResult closure(const CommutationGraph& graph,
                      std::span<const ElementId> seed) {
    if (seed.empty())
        throw std::invalid_argument("closure of the empty set is not defined");
    for (ElementId s : seed)
        if (s >= graph.vertex_count)
            throw std::out_of_range("seed id out of range");

    std::vector<std::uint32_t> level(graph.vertex_count, UINT32_MAX);
    std::vector<ElementId> frontier;
    ClosureResult out;
    out.seed.assign(seed.begin(), seed.end());
    std::sort(out.seed.begin(), out.seed.end());
    out.seed.erase(std::unique(out.seed.begin(), out.seed.end()),
                   out.seed.end());
    for (ElementId s : out.seed) {
        level[s] = 0;
        frontier.push_back(s);
    }
    std::uint32_t depth = 0;
    while (!frontier.empty()) {
        std::vector<ElementId> next;
        for (ElementId u : frontier) {
            for (ElementId w : graph.neighbors(u)) {
                if (level[w] == UINT32_MAX) {
                    level[w] = depth + 1;
                    next.push_back(w);
                }
            }
        }
        if (!next.empty()) ++depth;
        frontier = std::move(next);
    }
    out.max_level = depth;
    for (std::uint32_t v = 0; v < graph.vertex_count; ++v) {
        if (level[v] != UINT32_MAX) {
            out.members.push_back(v);
            out.levels.push_back(level[v]);
        }
    }
    return out;
}

ClosureResult closure(const CommutationGraph& graph, ElementId seed) {
    return closure(graph, std::span<const ElementId>(&seed, 1));
}

std::uint32_t stabilization_depth(const CommutationGraph& graph, ElementId a) {
    return closure(graph, a).max_level;
}

ClosednessResult is_commutatively_closed(const RingHandle& ring,
                                         std::span<const ElementId> members) {
    std::uint32_t n = static_cast<std::uint32_t>(ring.size());
    std::vector<bool> member(n, false);
    for (ElementId m : members) {
        if (m >= n) throw std::out_of_range("member id out of range");
        member[m] = true;
    }
    for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t d = 0; d < n; ++d) {
            if (member[ring.mul_raw(c, d)] && !member[ring.mul_raw(d, c)])
                return {false, std::make_pair(static_cast<ElementId>(c),
                                              static_cast<ElementId>(d))};
        }
    }
    return {true, std::nullopt};
}

} // namespace ccgraph
