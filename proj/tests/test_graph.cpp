#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ccgraph/graph.hpp"
#include "ccgraph/ring.hpp"
#include "ccgraph/rng.hpp"
#include "property_checks.hpp"

using namespace ccgraph;

namespace {

const char* kSmallRings[] = {"Z(12)", "GF(4)", "M(2,GF(2))", "M(2,GF(3))",
                             "Z(4)xM(2,GF(2))", "M(3,GF(2))"};

} // namespace

TEST_CASE("adjacency is symmetric, loop-free and matches the definition") {
    for (const char* spec : kSmallRings) {
        CAPTURE(spec);
        auto ring = build_ring(spec);
        CommutationGraph g = build_commutation_graph(*ring);
        REQUIRE(g.vertex_count == ring->size());
        std::uint64_t half_edges = 0;
        for (ElementId a = 0; a < g.vertex_count; ++a) {
            auto nb = g.neighbors(a);
            half_edges += nb.size();
            // Sorted, deduplicated, no self-loop.
            for (std::size_t i = 0; i + 1 < nb.size(); ++i)
                CHECK(nb[i] < nb[i + 1]);
            CHECK(!std::binary_search(nb.begin(), nb.end(), a));
            for (ElementId b : nb) CHECK(g.adjacent(b, a));
            // The one-step set recomputed from scratch must equal
            // {a} plus the neighbor list.
            std::set<ElementId> expect = testutil::brute_one_step(*ring, a);
            expect.erase(a);
            std::set<ElementId> got(nb.begin(), nb.end());
            CHECK(got == expect);
        }
        CHECK(half_edges == 2 * g.edge_count);
    }
}

TEST_CASE("neighbors_one includes the element itself") {
    auto ring = build_ring("M(2,GF(2))");
    for (ElementId a = 0; a < ring->size(); ++a) {
        auto nb = neighbors_one(*ring, a);
        CHECK(std::binary_search(nb.begin(), nb.end(), a));
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        std::set<ElementId> expect = testutil::brute_one_step(*ring, a);
        CHECK(std::set<ElementId>(nb.begin(), nb.end()) == expect);
        // Symmetry of the relation.
        for (ElementId b : nb) {
            auto back = neighbors_one(*ring, b);
            CHECK(std::binary_search(back.begin(), back.end(), a));
        }
    }
}

TEST_CASE("commutative rings produce edgeless graphs") {
    for (const char* spec : {"Z(12)", "GF(27)", "Z(2)xZ(3)xZ(5)"}) {
        auto ring = build_ring(spec);
        CommutationGraph g = build_commutation_graph(*ring);
        CHECK(g.edge_count == 0);
        CHECK(g.component_count == g.vertex_count);
    }
}

TEST_CASE("closures equal connected components with BFS levels") {
    for (const char* spec : kSmallRings) {
        CAPTURE(spec);
        auto ring = build_ring(spec);
        CommutationGraph g = build_commutation_graph(*ring);
        for (ElementId a = 0; a < g.vertex_count; ++a) {
            ClosureResult cl = closure(g, a);
            CHECK(std::set<ElementId>(cl.members.begin(), cl.members.end()) ==
                  testutil::component_members(g, a));
            // Levels are BFS depths: level 0 is the seed, each level-i member
            // has a neighbor at level i-1, and no neighbor more than one
            // level away.
            REQUIRE(cl.members.size() == cl.levels.size());
            std::uint32_t max_seen = 0;
            for (std::size_t i = 0; i < cl.members.size(); ++i) {
                std::uint32_t lv = cl.levels[i];
                max_seen = std::max(max_seen, lv);
                if (lv == 0) {
                    CHECK(cl.members[i] == a);
                    continue;
                }
                bool has_parent = false;
                for (ElementId nb : g.neighbors(cl.members[i]))
                    has_parent = has_parent || cl.level_of(nb) == lv - 1;
                CHECK(has_parent);
            }
            CHECK(cl.max_level == max_seen);
            CHECK(stabilization_depth(g, a) == cl.max_level);
        }
    }
}

TEST_CASE("multi-seed closures are unions of single-seed closures") {
    auto ring = build_ring("M(2,GF(3))");
    CommutationGraph g = build_commutation_graph(*ring);
    Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        std::vector<ElementId> seeds;
        for (int i = 0; i < 3; ++i)
            seeds.push_back(static_cast<ElementId>(rng.below(g.vertex_count)));
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        ClosureResult joint = closure(g, seeds);
        std::set<ElementId> expect;
        for (ElementId s : seeds) {
            ClosureResult single = closure(g, s);
            expect.insert(single.members.begin(), single.members.end());
        }
        std::set<ElementId> got(joint.members.begin(), joint.members.end());
        CHECK(got == expect);
        // Monotonicity: a closure of a subset stays inside.
        ClosureResult sub = closure(g, seeds.front());
        for (ElementId m : sub.members) CHECK(expect.count(m) == 1);
        // Idempotence: closing the closure adds nothing.
        ClosureResult again = closure(g, joint.members);
        CHECK(std::set<ElementId>(again.members.begin(), again.members.end()) ==
              got);
        CHECK(again.max_level == 0);
    }
}

TEST_CASE("closedness checker accepts closed families and reports witnesses") {
    auto ring = build_ring("M(2,GF(3))");
    std::vector<ElementId> nil;
    for (ElementId a = 0; a < ring->size(); ++a)
        if (ring->is_nilpotent(a)) nil.push_back(a);
    ClosednessResult res = is_commutatively_closed(*ring, nil);
    CHECK(res.closed);
    CHECK_FALSE(res.counterexample.has_value());

    auto m2 = build_ring("M(2,GF(2))");
    std::vector<ElementId> um1;
    for (ElementId u : m2->units()) um1.push_back(m2->sub(u, m2->one()));
    CHECK(is_commutatively_closed(*m2, um1).closed);

    // A single off-diagonal matrix unit is not closed; the witness must be a
    // genuine counterexample.
    ElementId e12 = 2;
    std::vector<ElementId> singleton = {e12};
    ClosednessResult bad = is_commutatively_closed(*m2, singleton);
    CHECK_FALSE(bad.closed);
    REQUIRE(bad.counterexample.has_value());
    auto [c, d] = *bad.counterexample;
    CHECK(m2->mul(c, d) == e12);
    CHECK(m2->mul(d, c) != e12);
}

TEST_CASE("dedup strategies and thread counts build identical graphs") {
    for (const char* spec : {"M(2,GF(3))", "Z(4)xM(2,GF(2))"}) {
        CAPTURE(spec);
        auto ring = build_ring(spec);
        GraphBuildOptions bitset;
        bitset.dedup = GraphBuildOptions::Dedup::Bitset;
        GraphBuildOptions merge;
        merge.dedup = GraphBuildOptions::Dedup::SortMerge;
        GraphBuildOptions threaded;
        threaded.threads = 8;
        CommutationGraph a = build_commutation_graph(*ring, bitset);
        CommutationGraph b = build_commutation_graph(*ring, merge);
        CommutationGraph c = build_commutation_graph(*ring, threaded);
        CHECK(a.neighbors_flat == b.neighbors_flat);
        CHECK(a.offsets == b.offsets);
        CHECK(a.neighbors_flat == c.neighbors_flat);
        CHECK(a.component == c.component);
        CHECK(a.edge_count == b.edge_count);
    }
}

TEST_CASE("matrix zero closure is the nilpotent cone") {
    auto ring = build_ring("M(2,GF(2))");
    CommutationGraph g = build_commutation_graph(*ring);
    ClosureResult cl = closure(g, ElementId{0});
    std::vector<ElementId> expect = testutil::brute_nilpotent_matrices(*ring);
    CHECK(std::set<ElementId>(cl.members.begin(), cl.members.end()) ==
          std::set<ElementId>(expect.begin(), expect.end()));
    CHECK(cl.members.size() == 4);
}
