#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccgraph/graph.hpp"
#include "ccgraph/ring.hpp"

namespace ccgraph {

/// Polynomial in noncommuting variables with integer coefficients: a map
/// from words over single-letter variables to coefficients. Words multiply
/// by concatenation, so xy and yx stay distinct.
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly constant(std::int64_t c);
    static NcPoly variable(char name);
    static NcPoly word(std::string_view w);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly& operator+=(const NcPoly& o);
    bool operator==(const NcPoly& o) const = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::string, std::int64_t>& terms() const { return terms_; }
    std::string to_string() const;

private:
    void add_term(const std::string& w, std::int64_t c);
    // Word -> coefficient; zero coefficients are never stored.
    std::map<std::string, std::int64_t> terms_;
};

/// One adjacency step between free-algebra elements: left = cd and
/// right = dc for the recorded witnesses c, d.
struct FreeChainStep {
    NcPoly left;
    NcPoly right;
    NcPoly witness_c;
    NcPoly witness_d;
};

/// Chain of l one-step moves in the free algebra on x, y taking
/// x + yx^l to x + x^l y: step i rewrites x + x^{i-1} y x^{l-i+1} to
/// x + x^i y x^{l-i}. Every step is validated by expanding cd and dc;
/// throws std::logic_error if any step fails and std::invalid_argument
/// when l < 1.
std::vector<FreeChainStep> free_algebra_chain(std::uint32_t l);

/// 2x2 matrix with entries in an arbitrary ring, row-major.
struct BlockMatrix2 {
    std::array<ElementId, 4> e{0, 0, 0, 0};
    bool operator==(const BlockMatrix2&) const = default;
};

BlockMatrix2 bm2_identity(const RingHandle& ring);
BlockMatrix2 bm2_diag(ElementId a, ElementId b);
BlockMatrix2 bm2_mul(const RingHandle& ring, const BlockMatrix2& a,
                     const BlockMatrix2& b);

/// The 2x2 transform tying 1+xy to 1+yx: P = F1 F2 and Q = G1 G2 with
/// triangular-or-elementary factors whose inverses are written out, and
/// P diag(1+xy, 1) Q = diag(1+yx, 1). Checks every equation for the given
/// x, y, constructing invertibility from the explicit factor inverses.
bool verify_stable_association(const RingHandle& ring, ElementId x,
                               ElementId y);

/// Per-edge version: for adjacent u = cd, v = dc the same transform with
/// x = -c, y = d carries diag(1-u, 1) to diag(1-v, 1). Returns the pair
/// (P, Q) for that edge.
struct EdgeTransform {
    BlockMatrix2 p;
    BlockMatrix2 q;
};
EdgeTransform edge_transform(const RingHandle& ring, ElementId c, ElementId d);

/// First factorization (c, d) of an adjacent pair u = cd, v = dc in
/// row-major scan order; empty when u and v are not one-step related.
std::optional<std::pair<ElementId, ElementId>>
find_factorization(const RingHandle& ring, ElementId u, ElementId v);

/// Walks a shortest path from a to b and composes the per-edge transforms:
/// the product pair (P, Q) must satisfy P diag(1-a, 1) Q = diag(1-b, 1).
/// False when the composition fails; throws Error when a and b are in
/// different components.
bool verify_path_association(const RingHandle& ring,
                             const CommutationGraph& graph, ElementId a,
                             ElementId b);

struct ClosureIdentityOptions {
    std::uint64_t seed = 0;
    /// Sample count per identity family when the ring is too large to
    /// enumerate.
    std::uint64_t samples = 10000;
    std::uint64_t exhaustive_limit = 512;
};

/// A failed identity instance: which law broke and the elements plugged in.
struct IdentityViolation {
    std::string law;
    std::vector<ElementId> elements;
};

/// One-step membership laws checked against the graph:
///   b with ba = 0  =>  a(1+b) is one step from a (and mirrored),
///   a(1+ba) is one step from a(1+ab),
///   xb = 0  =>  (y+b)x is one step from xy.
/// Returns the first violation found, or empty when every checked instance
/// holds.
std::optional<IdentityViolation>
verify_closure_identities(const RingHandle& ring, const CommutationGraph& graph,
                          const ClosureIdentityOptions& opts = {});

struct WitnessPair {
    ElementId x = 0;
    ElementId y = 0;
};

/// Search for x, y with ax = xb, ya = by, a^n = xy, b^n = yx. Intended for
/// rings of at most 512 elements; the scan is quadratic in the ring size.
std::optional<WitnessPair> find_relation_witnesses(const RingHandle& ring,
                                                   ElementId a, ElementId b,
                                                   std::uint32_t n);

} // namespace ccgraph
