#include "ccgraph/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ccgraph/analytics.hpp"
#include "ccgraph/errors.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/identities.hpp"
#include "ccgraph/matrix.hpp"
#include "ccgraph/rng.hpp"

namespace ccgraph {

using json = nlohmann::json;

const char* to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skip";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kExhaustivePairLimit = 1000000;
constexpr std::uint64_t kSampleCount = 1000;
constexpr std::uint64_t kPathPairCap = 200;
constexpr std::uint64_t kPathRingLimit = 512;

/// Shared per-ring state: the handle plus a lazily built graph, so a suite
/// pays for each graph once no matter how many checks use it.
struct Ctx {
    std::string spec; // canonical render; used for labels and seeds
    RingPtr ring;
    SuiteOptions opts;
    std::shared_ptr<const CommutationGraph> graph_ptr;

    const RingHandle& r() const { return *ring; }

    const CommutationGraph& graph() {
        if (!graph_ptr) {
            GraphBuildOptions g;
            g.threads = opts.threads;
            graph_ptr = std::make_shared<const CommutationGraph>(
                build_commutation_graph(*ring, g));
        }
        return *graph_ptr;
    }

    std::uint64_t seed_for(const char* check_id) const {
        return opts.seed ^ fnv1a(std::string(check_id) + "|" + spec);
    }
};

Ctx make_ctx(const std::string& spec, const SuiteOptions& opts) {
    Ctx ctx;
    BuildOptions b;
    b.allow_large = opts.allow_large;
    ctx.ring = build_ring(spec, b);
    ctx.spec = ctx.ring->descriptor().render();
    ctx.opts = opts;
    return ctx;
}

json element_json(const RingHandle& r, ElementId a) {
    return json{{"id", a}, {"render", r.render_element(a)}};
}

CheckResult finish(const Ctx& ctx, const char* check_id, json expected,
                   json actual, bool ok, json witness = nullptr) {
    CheckResult res;
    res.check_id = check_id;
    res.ring = ctx.spec;
    res.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    res.expected = std::move(expected);
    res.actual = std::move(actual);
    res.witness = std::move(witness);
    return res;
}

CheckResult skipped(const Ctx& ctx, const char* check_id, std::string reason) {
    CheckResult res;
    res.check_id = check_id;
    res.ring = ctx.spec;
    res.status = CheckStatus::Skipped;
    res.witness = json{{"reason", std::move(reason)}};
    return res;
}

// ---------------------------------------------------------------------------
// paper-core checks

CheckResult impl_nilpotent_class(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (!r.is_matrix_ring())
        return skipped(ctx, "nilpotent-class", "needs a matrix ring");
    std::uint32_t n = r.matrix_size();
    std::uint64_t q = r.base_field()->q();
    std::uint64_t expect_card = 1;
    for (std::uint64_t i = 0; i < std::uint64_t(n) * n - n; ++i)
        expect_card *= q;

    ClosureResult cl = closure(ctx.graph(), ElementId{0});
    std::vector<ElementId> nil;
    for (std::uint64_t a = 0; a < r.size(); ++a)
        if (r.is_nilpotent(static_cast<ElementId>(a)))
            nil.push_back(static_cast<ElementId>(a));

    bool match = cl.members == nil;
    bool card_ok = cl.members.size() == expect_card;
    bool level_ok = cl.max_level <= n - 1;

    json witness;
    if (!match) {
        std::size_t i = 0, j = 0;
        while (i < cl.members.size() || j < nil.size()) {
            if (j >= nil.size() ||
                (i < cl.members.size() && cl.members[i] < nil[j])) {
                witness = json{{"element", element_json(r, cl.members[i])},
                               {"in_zero_closure", true},
                               {"is_nilpotent", false}};
                break;
            }
            if (i >= cl.members.size() || nil[j] < cl.members[i]) {
                witness = json{{"element", element_json(r, nil[j])},
                               {"in_zero_closure", false},
                               {"is_nilpotent", true}};
                break;
            }
            ++i;
            ++j;
        }
    } else if (!level_ok) {
        for (std::size_t i = 0; i < cl.members.size(); ++i)
            if (cl.levels[i] == cl.max_level) {
                witness = json{{"element", element_json(r, cl.members[i])},
                               {"level", cl.max_level}};
                break;
            }
    }

    return finish(ctx, "nilpotent-class",
                  json{{"cardinality", expect_card},
                       {"matches_nilpotent_set", true},
                       {"max_level_at_most", n - 1}},
                  json{{"cardinality", cl.members.size()},
                       {"matches_nilpotent_set", match},
                       {"max_level", cl.max_level}},
                  match && card_ok && level_ok, std::move(witness));
}

CheckResult impl_distance_law(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (!r.is_matrix_ring())
        return skipped(ctx, "distance-law", "needs a matrix ring");
    const FiniteField& f = *r.base_field();
    std::vector<std::uint32_t> dist = bfs_distances(ctx.graph(), ElementId{0});

    std::uint64_t checked = 0, violations = 0;
    json witness;
    for (std::uint64_t a = 0; a < r.size(); ++a) {
        ElementId id = static_cast<ElementId>(a);
        auto idx = nilpotency_index(f, r.decode_matrix(id));
        if (!idx) continue;
        ++checked;
        if (dist[id] != *idx - 1) {
            ++violations;
            if (witness.is_null())
                witness = json{{"element", element_json(r, id)},
                               {"nilpotency_index", *idx},
                               {"distance", dist[id] == kUnreachable
                                                ? json("unreachable")
                                                : json(dist[id])}};
        }
    }
    return finish(ctx, "distance-law", json{{"violations", 0}},
                  json{{"nilpotents_checked", checked},
                       {"violations", violations}},
                  violations == 0, std::move(witness));
}

CheckResult impl_matrix_diameter(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (!r.is_matrix_ring())
        return skipped(ctx, "matrix-diameter", "needs a matrix ring");
    std::uint32_t n = r.matrix_size();
    std::uint32_t rd = ring_diameter(ctx.graph(), ctx.opts.threads);
    std::uint32_t zd = class_diameter(ctx.graph(), ElementId{0});
    bool ok = rd == n - 1 && zd == n - 1;
    return finish(ctx, "matrix-diameter",
                  json{{"nilpotent_class_diameter", n - 1},
                       {"ring_diameter", n - 1}},
                  json{{"nilpotent_class_diameter", zd},
                       {"ring_diameter", rd}},
                  ok);
}

CheckResult impl_unit_classes(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    const std::vector<ElementId>& units = r.units();
    std::vector<ElementId> inv(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        inv[i] = *r.try_inverse(units[i]);

    std::vector<char> seen(r.size(), 0);
    std::uint64_t class_count = 0;
    bool orbits_ok = true, cliques_ok = true;
    json witness;

    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        ElementId u = units[ui];
        if (seen[u]) continue;
        ++class_count;

        std::vector<ElementId> orbit;
        orbit.reserve(units.size());
        for (std::size_t gi = 0; gi < units.size(); ++gi)
            orbit.push_back(r.mul_raw(r.mul_raw(units[gi], u), inv[gi]));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (ElementId x : orbit) seen[x] = 1;

        ClosureResult cl = closure(ctx.graph(), u);
        if (cl.members != orbit) {
            if (orbits_ok)
                witness = json{{"unit", element_json(r, u)},
                               {"closure_size", cl.members.size()},
                               {"orbit_size", orbit.size()}};
            orbits_ok = false;
        }

        bool clique = true;
        for (std::size_t i = 0; i < orbit.size() && clique; ++i)
            for (std::size_t j = i + 1; j < orbit.size(); ++j)
                if (!ctx.graph().adjacent(orbit[i], orbit[j])) {
                    clique = false;
                    if (cliques_ok)
                        witness = json{{"unit", element_json(r, u)},
                                       {"non_adjacent",
                                        json::array({element_json(r, orbit[i]),
                                                     element_json(r, orbit[j])})}};
                    break;
                }
        if (!clique) cliques_ok = false;
    }

    return finish(ctx, "unit-classes",
                  json{{"classes_are_cliques", true},
                       {"closures_are_conjugacy_orbits", true}},
                  json{{"class_count", class_count},
                       {"classes_are_cliques", cliques_ok},
                       {"closures_are_conjugacy_orbits", orbits_ok},
                       {"unit_count", units.size()}},
                  orbits_ok && cliques_ok, std::move(witness));
}

CheckResult impl_girth(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (!r.is_matrix_ring() || r.matrix_size() < 2)
        return skipped(ctx, "girth",
                       "needs a matrix ring of size at least 2");
    auto rg = ring_girth(ctx.graph(), ctx.opts.threads);
    auto cg = class_girth(ctx.graph(), ElementId{0});
    bool ok = rg && *rg == 3 && cg && *cg == 3;
    auto as_json = [](const std::optional<std::uint32_t>& v) {
        return v ? json(*v) : json("acyclic");
    };
    return finish(ctx, "girth",
                  json{{"nilpotent_class_girth", 3}, {"ring_girth", 3}},
                  json{{"nilpotent_class_girth", as_json(cg)},
                       {"ring_girth", as_json(rg)}},
                  ok);
}

CheckResult impl_product_laws(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (!r.is_product())
        return skipped(ctx, "product-laws", "needs a product ring");
    auto [lf, rf] = r.factors();
    GraphBuildOptions go;
    go.threads = ctx.opts.threads;
    CommutationGraph ga = build_commutation_graph(*lf, go);
    CommutationGraph gb = build_commutation_graph(*rf, go);
    const CommutationGraph& gp = ctx.graph();

    std::uint32_t da = ring_diameter(ga, ctx.opts.threads);
    std::uint32_t db = ring_diameter(gb, ctx.opts.threads);
    std::uint32_t dp = ring_diameter(gp, ctx.opts.threads);
    bool diam_ok = dp == std::max(da, db);

    // The component label of (x, y) must be a function of the pair of factor
    // labels, and that correspondence must be one to one. This is a complete
    // check that components multiply.
    bool comp_ok = true;
    json witness;
    std::vector<std::int64_t> key_to_label(
        std::size_t(ga.component_count) * gb.component_count, -1);
    std::vector<std::int64_t> label_to_key(gp.component_count, -1);
    for (ElementId e = 0; e < gp.vertex_count && comp_ok; ++e) {
        auto [x, y] = r.split(e);
        std::size_t key =
            std::size_t(ga.component[x]) * gb.component_count + gb.component[y];
        std::int64_t lab = gp.component[e];
        if (key_to_label[key] == -1) key_to_label[key] = lab;
        if (label_to_key[lab] == -1) label_to_key[lab] = std::int64_t(key);
        if (key_to_label[key] != lab ||
            label_to_key[lab] != std::int64_t(key)) {
            comp_ok = false;
            witness = json{{"element", element_json(r, e)}};
        }
    }

    // Closure membership and levels, elementwise: exhaustive on small
    // products, seeded samples on large ones.
    bool closures_ok = true;
    std::uint64_t checked = 0;
    bool exhaustive = r.size() <= kSampleCount;
    Rng rng(ctx.seed_for("product-laws"));
    std::uint64_t total = exhaustive ? r.size() : kSampleCount;
    for (std::uint64_t s = 0; s < total && closures_ok; ++s) {
        ElementId e = exhaustive ? static_cast<ElementId>(s)
                                 : static_cast<ElementId>(rng.below(r.size()));
        auto [x, y] = r.split(e);
        ClosureResult cp = closure(gp, e);
        ClosureResult cx = closure(ga, x);
        ClosureResult cy = closure(gb, y);
        std::vector<ElementId> prod;
        prod.reserve(cx.members.size() * cy.members.size());
        for (ElementId xa : cx.members)
            for (ElementId yb : cy.members)
                prod.push_back(r.combine(xa, yb));
        std::sort(prod.begin(), prod.end());
        ++checked;
        if (prod != cp.members) {
            closures_ok = false;
            witness = json{{"seed", element_json(r, e)},
                           {"closure_size", cp.members.size()},
                           {"product_size", prod.size()}};
            break;
        }
        for (std::size_t i = 0; i < cx.members.size() && closures_ok; ++i)
            for (std::size_t j = 0; j < cy.members.size(); ++j) {
                ElementId comb = r.combine(cx.members[i], cy.members[j]);
                std::uint32_t want = std::max(cx.levels[i], cy.levels[j]);
                if (cp.level_of(comb) != want) {
                    closures_ok = false;
                    witness = json{{"seed", element_json(r, e)},
                                   {"member", element_json(r, comb)},
                                   {"level", cp.level_of(comb)},
                                   {"factor_level_max", want}};
                    break;
                }
            }
    }

    bool ok = diam_ok && comp_ok && closures_ok;
    return finish(ctx, "product-laws",
                  json{{"closures_factor", true},
                       {"components_factor", true},
                       {"diameter_is_max_of_factors", true}},
                  json{{"closures_checked", checked},
                       {"closures_factor", closures_ok},
                       {"components_factor", comp_ok},
                       {"diameter", dp},
                       {"diameter_is_max_of_factors", diam_ok},
                       {"left_diameter", da},
                       {"mode", exhaustive ? "exhaustive" : "sampled"},
                       {"right_diameter", db}},
                  ok, std::move(witness));
}

/// Block sizes when the ring is a direct product of full matrix rings over
/// fields (a lone matrix or field counts; Z(p) with p prime is a field).
std::optional<std::vector<std::uint32_t>>
semisimple_blocks(const RingDescriptor& desc) {
    std::vector<std::uint32_t> blocks;
    std::vector<const RingDescriptor*> stack{&desc};
    while (!stack.empty()) {
        const RingDescriptor* d = stack.back();
        stack.pop_back();
        switch (d->kind()) {
        case RingDescriptor::Kind::Product:
            stack.push_back(&d->right());
            stack.push_back(&d->left());
            break;
        case RingDescriptor::Kind::Matrix:
            blocks.push_back(d->matrix_size());
            break;
        case RingDescriptor::Kind::Galois:
            blocks.push_back(1);
            break;
        case RingDescriptor::Kind::Modular:
            if (!is_prime(d->modulus())) return std::nullopt;
            blocks.push_back(1);
            break;
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

CheckResult impl_semisimple_diameter(Ctx& ctx) {
    auto blocks = semisimple_blocks(ctx.r().descriptor());
    if (!blocks)
        return skipped(ctx, "semisimple-diameter",
                       "needs a product of matrix rings over fields");
    std::uint32_t want = blocks->back() - 1;
    std::uint32_t got = ring_diameter(ctx.graph(), ctx.opts.threads);
    return finish(ctx, "semisimple-diameter",
                  json{{"ring_diameter", want}},
                  json{{"block_sizes", *blocks}, {"ring_diameter", got}},
                  got == want);
}

CheckResult impl_closed_families(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    std::uint64_t n = r.size();
    ElementId one = r.one();

    std::vector<ElementId> nil, shifted_units, lz, rz, annihilated;
    for (std::uint64_t a = 0; a < n; ++a) {
        ElementId id = static_cast<ElementId>(a);
        if (r.is_nilpotent(id)) nil.push_back(id);
        if (r.is_left_zero_divisor(id)) lz.push_back(r.add(id, one));
        if (r.is_right_zero_divisor(id)) rz.push_back(r.add(id, one));
    }
    for (ElementId u : r.units()) shifted_units.push_back(r.sub(u, one));
    // Elements u whose u - 1 is annihilated on the left by some m != 0;
    // computed straight from the definition rather than via the zero
    // divisor predicates.
    for (std::uint64_t u = 0; u < n; ++u) {
        ElementId a = r.sub(static_cast<ElementId>(u), one);
        for (std::uint64_t m = 1; m < n; ++m)
            if (r.mul_raw(static_cast<ElementId>(m), a) == 0) {
                annihilated.push_back(static_cast<ElementId>(u));
                break;
            }
    }
    std::sort(shifted_units.begin(), shifted_units.end());
    std::sort(lz.begin(), lz.end());
    std::sort(rz.begin(), rz.end());

    std::vector<std::pair<const char*, const std::vector<ElementId>*>> fams{
        {"annihilated_shifts", &annihilated},
        {"left_zero_divisors_plus_one", &lz},
        {"nilpotents", &nil},
        {"right_zero_divisors_plus_one", &rz},
        {"units_minus_one", &shifted_units},
    };

    json expected = json::object(), actual = json::object(), witness;
    bool all_ok = true;
    for (auto& [name, members] : fams) {
        ClosednessResult res = is_commutatively_closed(r, *members);
        expected[name] = true;
        actual[name] = res.closed;
        if (!res.closed) {
            all_ok = false;
            if (witness.is_null())
                witness = json{{"family", name},
                               {"c", element_json(r, res.counterexample->first)},
                               {"d", element_json(r, res.counterexample->second)}};
        }
    }
    return finish(ctx, "closed-families", std::move(expected),
                  std::move(actual), all_ok, std::move(witness));
}

CheckResult impl_dedekind_finite(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    std::uint64_t n = r.size();
    ElementId one = r.one();
    std::uint64_t found = 0, violations = 0;
    json witness;
    bool exhaustive = n * n <= kExhaustivePairLimit;

    auto note = [&](ElementId a, ElementId b) {
        ++found;
        if (r.mul_raw(b, a) != one) {
            ++violations;
            if (witness.is_null())
                witness = json{{"a", element_json(r, a)},
                               {"b", element_json(r, b)}};
        }
    };

    if (exhaustive) {
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                if (r.mul_raw(static_cast<ElementId>(a),
                              static_cast<ElementId>(b)) == one)
                    note(static_cast<ElementId>(a), static_cast<ElementId>(b));
    } else {
        Rng rng(ctx.seed_for("dedekind-finite"));
        for (std::uint64_t s = 0; s < kSampleCount; ++s) {
            ElementId a = static_cast<ElementId>(rng.below(n));
            for (std::uint64_t b = 0; b < n; ++b)
                if (r.mul_raw(a, static_cast<ElementId>(b)) == one)
                    note(a, static_cast<ElementId>(b));
        }
    }
    return finish(ctx, "dedekind-finite", json{{"violations", 0}},
                  json{{"mode", exhaustive ? "exhaustive" : "sampled"},
                       {"one_sided_inverses_found", found},
                       {"violations", violations}},
                  violations == 0, std::move(witness));
}

CheckResult impl_level_nilpotency(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    ClosureResult cl = closure(ctx.graph(), ElementId{0});
    std::uint64_t violations = 0;
    json witness;
    for (std::size_t i = 0; i < cl.members.size(); ++i) {
        ElementId a = cl.members[i];
        if (r.pow(a, cl.levels[i] + 1) != 0) {
            ++violations;
            if (witness.is_null())
                witness = json{{"element", element_json(r, a)},
                               {"level", cl.levels[i]}};
        }
    }
    return finish(ctx, "level-nilpotency", json{{"violations", 0}},
                  json{{"max_level", cl.max_level},
                       {"members_checked", cl.members.size()},
                       {"violations", violations}},
                  violations == 0, std::move(witness));
}

CheckResult impl_stabilization_bounds(Ctx& ctx) {
    const CommutationGraph& g = ctx.graph();
    std::vector<std::uint32_t> ecc = all_eccentricities(g, ctx.opts.threads);
    std::vector<std::uint32_t> diam(g.component_count, 0);
    for (ElementId v = 0; v < g.vertex_count; ++v)
        diam[g.component[v]] = std::max(diam[g.component[v]], ecc[v]);

    std::uint64_t violations = 0;
    json witness;
    for (ElementId v = 0; v < g.vertex_count; ++v) {
        std::uint32_t d = diam[g.component[v]];
        if (!(ecc[v] <= d && d <= 2 * ecc[v]) && !(d == 0 && ecc[v] == 0)) {
            ++violations;
            if (witness.is_null())
                witness = json{{"element", element_json(ctx.r(), v)},
                               {"eccentricity", ecc[v]},
                               {"component_diameter", d}};
        }
    }
    return finish(ctx, "stabilization-bounds", json{{"violations", 0}},
                  json{{"component_count", g.component_count},
                       {"vertices", g.vertex_count},
                       {"violations", violations}},
                  violations == 0, std::move(witness));
}

// ---------------------------------------------------------------------------
// identities checks

CheckResult impl_stable_association(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    std::uint64_t n = r.size();
    std::uint64_t checked = 0, violations = 0;
    json witness;
    bool exhaustive = n * n <= kExhaustivePairLimit;

    auto probe = [&](ElementId x, ElementId y) {
        ++checked;
        if (!verify_stable_association(r, x, y)) {
            ++violations;
            if (witness.is_null())
                witness = json{{"x", element_json(r, x)},
                               {"y", element_json(r, y)}};
        }
    };

    if (exhaustive) {
        for (std::uint64_t x = 0; x < n; ++x)
            for (std::uint64_t y = 0; y < n; ++y)
                probe(static_cast<ElementId>(x), static_cast<ElementId>(y));
    } else {
        Rng rng(ctx.seed_for("stable-association"));
        for (std::uint64_t s = 0; s < kSampleCount; ++s)
            probe(static_cast<ElementId>(rng.below(n)),
                  static_cast<ElementId>(rng.below(n)));
    }
    return finish(ctx, "stable-association", json{{"violations", 0}},
                  json{{"mode", exhaustive ? "exhaustive" : "sampled"},
                       {"pairs_checked", checked},
                       {"violations", violations}},
                  violations == 0, std::move(witness));
}

CheckResult impl_closure_identities(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    ClosureIdentityOptions o;
    o.seed = ctx.seed_for("closure-identities");
    o.samples = kSampleCount;
    o.exhaustive_limit = 512;
    auto violation = verify_closure_identities(r, ctx.graph(), o);

    json witness;
    if (violation) {
        json elems = json::array();
        for (ElementId e : violation->elements)
            elems.push_back(element_json(r, e));
        witness = json{{"law", violation->law}, {"elements", std::move(elems)}};
    }
    return finish(ctx, "closure-identities", json{{"holds", true}},
                  json{{"holds", !violation},
                       {"mode", r.size() <= o.exhaustive_limit ? "exhaustive"
                                                               : "sampled"}},
                  !violation, std::move(witness));
}

CheckResult impl_path_association(Ctx& ctx) {
    const RingHandle& r = ctx.r();
    if (r.size() > kPathRingLimit)
        return skipped(ctx, "path-association",
                       "factorization search is quadratic in ring size; "
                       "limit is 512 elements");
    const CommutationGraph& g = ctx.graph();

    std::vector<std::int64_t> rep(g.component_count, -1);
    for (ElementId v = 0; v < g.vertex_count; ++v)
        if (rep[g.component[v]] == -1) rep[g.component[v]] = v;

    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (ElementId v = 0; v < g.vertex_count; ++v) {
        ElementId root = static_cast<ElementId>(rep[g.component[v]]);
        if (v != root) pairs.emplace_back(root, v);
    }
    // Deterministic thinning: stride so at most kPathPairCap pairs remain,
    // spread over all components.
    std::size_t stride =
        pairs.size() > kPathPairCap
            ? (pairs.size() + kPathPairCap - 1) / kPathPairCap
            : 1;

    std::uint64_t checked = 0, failures = 0;
    json witness;
    for (std::size_t i = 0; i < pairs.size(); i += stride) {
        ++checked;
        auto [a, b] = pairs[i];
        if (!verify_path_association(r, g, a, b)) {
            ++failures;
            if (witness.is_null())
                witness = json{{"from", element_json(r, a)},
                               {"to", element_json(r, b)}};
        }
    }
    return finish(ctx, "path-association", json{{"failures", 0}},
                  json{{"failures", failures}, {"pairs_checked", checked}},
                  failures == 0, std::move(witness));
}

CheckResult free_chain_result() {
    CheckResult res;
    res.check_id = "free-algebra-chain";
    res.ring = "K<x,y>";

    constexpr std::uint32_t kMaxLength = 10;
    std::uint64_t failures = 0;
    json witness;
    for (std::uint32_t l = 1; l <= kMaxLength; ++l) {
        bool ok = true;
        std::string why;
        try {
            std::vector<FreeChainStep> steps = free_algebra_chain(l);
            NcPoly x = NcPoly::variable('x');
            NcPoly first = x + NcPoly::word("y" + std::string(l, 'x'));
            NcPoly last = x + NcPoly::word(std::string(l, 'x') + "y");
            if (steps.size() != l) {
                ok = false;
                why = "wrong number of steps";
            } else if (!(steps.front().left == first)) {
                ok = false;
                why = "wrong start polynomial";
            } else if (!(steps.back().right == last)) {
                ok = false;
                why = "wrong end polynomial";
            } else {
                for (std::size_t i = 0; i + 1 < steps.size(); ++i)
                    if (!(steps[i].right == steps[i + 1].left)) {
                        ok = false;
                        why = "steps do not chain";
                        break;
                    }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        if (!ok) {
            ++failures;
            if (witness.is_null())
                witness = json{{"length", l}, {"reason", why}};
        }
    }
    res.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    res.expected = json{{"chain_lengths", "1..10"}, {"failures", 0}};
    res.actual = json{{"failures", failures}};
    res.witness = std::move(witness);
    return res;
}

// ---------------------------------------------------------------------------
// suite plumbing

CheckResult run_one(Ctx& ctx, const char* id, CheckResult (*fn)(Ctx&)) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
        res = fn(ctx);
    } catch (const std::exception& e) {
        res.check_id = id;
        res.ring = ctx.spec;
        res.status = CheckStatus::Fail;
        res.expected = json{{"completes", true}};
        res.actual = json{{"completes", false}};
        res.witness = json{{"error", e.what()}};
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

void sort_and_count(Report& rep) {
    std::stable_sort(rep.results.begin(), rep.results.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         return std::tie(a.check_id, a.ring) <
                                std::tie(b.check_id, b.ring);
                     });
    rep.passed = rep.failed = rep.skipped = 0;
    for (const CheckResult& r : rep.results) {
        switch (r.status) {
        case CheckStatus::Pass: ++rep.passed; break;
        case CheckStatus::Fail: ++rep.failed; break;
        case CheckStatus::Skipped: ++rep.skipped; break;
        }
    }
}

} // namespace

std::vector<std::string> suite_names() { return {"paper-core", "identities"}; }

std::vector<std::string> default_suite_rings(const std::string& suite) {
    if (suite == "paper-core" || suite == "identities")
        return {"Z(12)",           "GF(4)",
                "M(2,GF(2))",      "M(2,GF(3))",
                "M(3,GF(2))",      "Z(4)xM(2,GF(2))",
                "M(2,GF(2))xM(3,GF(2))"};
    throw Error("unknown suite: " + suite);
}

Report run_suite(const std::string& suite,
                 const std::vector<std::string>& rings,
                 const SuiteOptions& opts) {
    bool core = suite == "paper-core";
    bool ident = suite == "identities";
    if (!core && !ident)
        throw Error("unknown suite: " + suite +
                    " (available: paper-core, identities)");

    std::vector<std::string> list = rings.empty() ? default_suite_rings(suite)
                                                  : rings;
    Report rep;
    rep.suite = suite;
    rep.seed = opts.seed;

    for (const std::string& spec : list) {
        Ctx ctx = make_ctx(spec, opts);
        auto add = [&](const char* id, CheckResult (*fn)(Ctx&)) {
            rep.results.push_back(run_one(ctx, id, fn));
        };
        if (core) {
            add("dedekind-finite", impl_dedekind_finite);
            add("closed-families", impl_closed_families);
            add("level-nilpotency", impl_level_nilpotency);
            add("stabilization-bounds", impl_stabilization_bounds);
            add("unit-classes", impl_unit_classes);
            if (ctx.r().is_matrix_ring()) {
                add("nilpotent-class", impl_nilpotent_class);
                add("distance-law", impl_distance_law);
                add("matrix-diameter", impl_matrix_diameter);
                if (ctx.r().matrix_size() >= 2) add("girth", impl_girth);
            }
            if (ctx.r().is_product()) {
                add("product-laws", impl_product_laws);
                if (semisimple_blocks(ctx.r().descriptor()))
                    add("semisimple-diameter", impl_semisimple_diameter);
            }
        } else {
            add("stable-association", impl_stable_association);
            add("closure-identities", impl_closure_identities);
            add("path-association", impl_path_association);
        }
    }

    if (ident) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult res = free_chain_result();
        res.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        rep.results.push_back(std::move(res));
    }

    sort_and_count(rep);
    return rep;
}

nlohmann::json report_to_json(const Report& report) {
    std::vector<const CheckResult*> order;
    order.reserve(report.results.size());
    for (const CheckResult& r : report.results) order.push_back(&r);
    std::stable_sort(order.begin(), order.end(),
                     [](const CheckResult* a, const CheckResult* b) {
                         return std::tie(a->check_id, a->ring) <
                                std::tie(b->check_id, b->ring);
                     });

    json results = json::array();
    for (const CheckResult* r : order) {
        json item{{"check_id", r->check_id},
                  {"ring", r->ring},
                  {"status", to_string(r->status)},
                  {"expected", r->expected},
                  {"actual", r->actual}};
        if (!r->witness.is_null()) item["witness"] = r->witness;
        results.push_back(std::move(item));
    }
    return json{{"results", std::move(results)},
                {"seed", report.seed},
                {"suite", report.suite},
                {"summary",
                 {{"fail", report.failed},
                  {"pass", report.passed},
                  {"skip", report.skipped},
                  {"total", report.results.size()}}}};
}

// ---------------------------------------------------------------------------
// single-check entry points

#define CCGRAPH_CHECK_ENTRY(fn_name, id, impl)                                \
    CheckResult fn_name(const std::string& ring_spec,                         \
                        const SuiteOptions& opts) {                           \
        Ctx ctx = make_ctx(ring_spec, opts);                                  \
        return run_one(ctx, id, impl);                                        \
    }

CCGRAPH_CHECK_ENTRY(check_nilpotent_class, "nilpotent-class",
                    impl_nilpotent_class)
CCGRAPH_CHECK_ENTRY(check_distance_law, "distance-law", impl_distance_law)
CCGRAPH_CHECK_ENTRY(check_matrix_diameter, "matrix-diameter",
                    impl_matrix_diameter)
CCGRAPH_CHECK_ENTRY(check_unit_classes, "unit-classes", impl_unit_classes)
CCGRAPH_CHECK_ENTRY(check_girth, "girth", impl_girth)
CCGRAPH_CHECK_ENTRY(check_product_laws, "product-laws", impl_product_laws)
CCGRAPH_CHECK_ENTRY(check_semisimple_diameter, "semisimple-diameter",
                    impl_semisimple_diameter)
CCGRAPH_CHECK_ENTRY(check_closed_families, "closed-families",
                    impl_closed_families)
CCGRAPH_CHECK_ENTRY(check_dedekind_finite, "dedekind-finite",
                    impl_dedekind_finite)
CCGRAPH_CHECK_ENTRY(check_level_nilpotency, "level-nilpotency",
                    impl_level_nilpotency)
CCGRAPH_CHECK_ENTRY(check_stabilization_bounds, "stabilization-bounds",
                    impl_stabilization_bounds)
CCGRAPH_CHECK_ENTRY(check_stable_association, "stable-association",
                    impl_stable_association)
CCGRAPH_CHECK_ENTRY(check_closure_identities, "closure-identities",
                    impl_closure_identities)
CCGRAPH_CHECK_ENTRY(check_path_association, "path-association",
                    impl_path_association)

#undef CCGRAPH_CHECK_ENTRY

CheckResult check_free_algebra_chain(const SuiteOptions&) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res = free_chain_result();
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

} // namespace ccgraph
