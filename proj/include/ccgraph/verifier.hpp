#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccgraph/ring.hpp"

namespace ccgraph {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status);

/// Outcome of one named check against one ring.  `expected` and `actual`
/// hold machine-comparable JSON payloads; `witness` is populated on failure
/// (concrete counterexample data) and carries the reason on a skip.
struct CheckResult {
    std::string check_id;
    std::string ring;
    CheckStatus status = CheckStatus::Skipped;
    nlohmann::json expected;
    nlohmann::json actual;
    nlohmann::json witness;
    // Wall-clock cost; informational only and deliberately kept out of the
    // serialized report so report bytes do not depend on machine load.
    double elapsed_seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    unsigned threads = 0;    // 0 = hardware concurrency
    bool allow_large = false;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;
    std::uint32_t passed = 0;
    std::uint32_t failed = 0;
    std::uint32_t skipped = 0;
};

/// Names of the available suites ("paper-core", "identities").
std::vector<std::string> suite_names();

/// Ring specs a suite runs against when the caller supplies none.
std::vector<std::string> default_suite_rings(const std::string& suite);

/// Runs every check of `suite` over `rings` (empty = suite defaults).
/// Each ring and its graph are built once and shared across checks.  A
/// failing check never aborts the run.  Throws Error for an unknown suite
/// and propagates ring-spec errors.
Report run_suite(const std::string& suite,
                 const std::vector<std::string>& rings,
                 const SuiteOptions& opts = {});

/// Deterministic serialization: results sorted by (check_id, ring), no
/// timing data, stable key order.
nlohmann::json report_to_json(const Report& report);

// Individual checks.  Each builds the named ring itself; the suite runner
// uses shared internals instead.  Checks that do not apply to the given
// ring kind return a Skipped result rather than throwing.

/// Closure of {0} equals the nilpotent elements; for M(n, F_q) their count
/// is q^(n*n-n) and closure levels stabilize by n-1.
CheckResult check_nilpotent_class(const std::string& ring_spec,
                                  const SuiteOptions& opts = {});

/// In a matrix ring, graph distance from a nilpotent A to 0 equals the
/// nilpotency index of A minus one.
CheckResult check_distance_law(const std::string& ring_spec,
                               const SuiteOptions& opts = {});

/// M(n, F): diameter of the whole graph and of the nilpotent component both
/// equal n-1.
CheckResult check_matrix_diameter(const std::string& ring_spec,
                                  const SuiteOptions& opts = {});

/// The closure of a unit is exactly its conjugacy orbit and forms a clique.
CheckResult check_unit_classes(const std::string& ring_spec,
                               const SuiteOptions& opts = {});

/// M(n, F) with n >= 2: shortest cycle length is 3, both in the nilpotent
/// component and globally.
CheckResult check_girth(const std::string& ring_spec,
                        const SuiteOptions& opts = {});

/// Product rings: components, closure levels and diameter all factor
/// componentwise (diameter = max over factors).
CheckResult check_product_laws(const std::string& ring_spec,
                               const SuiteOptions& opts = {});

/// Products of matrix rings over fields: diameter = max block size - 1.
CheckResult check_semisimple_diameter(const std::string& ring_spec,
                                      const SuiteOptions& opts = {});

/// Nilpotents, shifted units and shifted one-sided zero divisors are all
/// commutatively closed families.
CheckResult check_closed_families(const std::string& ring_spec,
                                  const SuiteOptions& opts = {});

/// ab = 1 implies ba = 1 (finite rings are Dedekind-finite).
CheckResult check_dedekind_finite(const std::string& ring_spec,
                                  const SuiteOptions& opts = {});

/// An element first reached at level i of the closure of {0} satisfies
/// a^(i+1) = 0, in any ring.
CheckResult check_level_nilpotency(const std::string& ring_spec,
                                   const SuiteOptions& opts = {});

/// Per component: ecc(a) <= diameter <= 2 ecc(a) for every member a.
CheckResult check_stabilization_bounds(const std::string& ring_spec,
                                       const SuiteOptions& opts = {});

/// 2x2 block identity: P (1-xy (+) 1) Q = (1-yx (+) 1) with explicit
/// elementary factorizations of P and Q, over sampled or all pairs.
CheckResult check_stable_association(const std::string& ring_spec,
                                     const SuiteOptions& opts = {});

/// One-step membership laws (annihilator shifts, perturbed products).
CheckResult check_closure_identities(const std::string& ring_spec,
                                     const SuiteOptions& opts = {});

/// Walks graph paths and composes the per-edge block transforms into an
/// end-to-end association witness.
CheckResult check_path_association(const std::string& ring_spec,
                                   const SuiteOptions& opts = {});

/// x + y x^l connects to x + x^l y through l one-step factorizations in the
/// free algebra on x, y.
CheckResult check_free_algebra_chain(const SuiteOptions& opts = {});

} // namespace ccgraph
