#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ccgraph/errors.hpp"
#include "ccgraph/verifier.hpp"

using namespace ccgraph;

TEST_CASE("suite names and default rings are wired up") {
    auto names = suite_names();
    REQUIRE(names.size() == 2);
    CHECK(std::find(names.begin(), names.end(), "paper-core") != names.end());
    CHECK(std::find(names.begin(), names.end(), "identities") != names.end());
    for (const auto& n : names) CHECK_FALSE(default_suite_rings(n).empty());
    CHECK_THROWS_AS(default_suite_rings("nope"), Error);
    CHECK_THROWS_AS(run_suite("nope", {}, {}), Error);
}

TEST_CASE("core suite passes on a small ring selection") {
    SuiteOptions opts;
    opts.seed = 42;
    Report rep = run_suite("paper-core", {"Z(12)", "M(2,GF(2))"}, opts);
    CHECK(rep.failed == 0);
    CHECK(rep.skipped == 0);
    CHECK(rep.passed == rep.results.size());
    CHECK(rep.passed + rep.failed + rep.skipped == rep.results.size());
    // Results are ordered by check id then ring.
    for (std::size_t i = 1; i < rep.results.size(); ++i) {
        const auto& a = rep.results[i - 1];
        const auto& b = rep.results[i];
        CHECK(std::tie(a.check_id, a.ring) <= std::tie(b.check_id, b.ring));
    }
    // Matrix-only checks run only on the matrix ring.
    for (const auto& r : rep.results) {
        if (r.check_id == "nilpotent-class" || r.check_id == "girth")
            CHECK(r.ring == "M(2,GF(2))");
        if (r.check_id == "closed-families" || r.check_id == "unit-classes")
            CHECK((r.ring == "Z(12)" || r.ring == "M(2,GF(2))"));
    }
}

TEST_CASE("identities suite passes and includes the symbolic chain") {
    SuiteOptions opts;
    opts.seed = 7;
    Report rep = run_suite("identities", {"Z(6)", "M(2,GF(2))"}, opts);
    CHECK(rep.failed == 0);
    bool has_chain = false;
    for (const auto& r : rep.results)
        has_chain = has_chain || r.check_id == "free-algebra-chain";
    CHECK(has_chain);
}

TEST_CASE("reports serialize deterministically across thread counts") {
    SuiteOptions one;
    one.seed = 42;
    one.threads = 1;
    SuiteOptions many;
    many.seed = 42;
    many.threads = 8;
    for (const char* suite : {"paper-core", "identities"}) {
        CAPTURE(suite);
        Report a = run_suite(suite, {"M(2,GF(2))", "Z(12)"}, one);
        Report b = run_suite(suite, {"M(2,GF(2))", "Z(12)"}, many);
        CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
    }
}

TEST_CASE("report json carries the summary and omits timing") {
    SuiteOptions opts;
    opts.seed = 1;
    Report rep = run_suite("identities", {"Z(6)"}, opts);
    auto j = report_to_json(rep);
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["total"].get<std::size_t>() == rep.results.size());
    CHECK(j["summary"]["pass"].get<std::size_t>() == rep.passed);
    CHECK(j["suite"] == "identities");
    CHECK(j["seed"] == 1);
    for (const auto& item : j["results"]) {
        CHECK(item.contains("check_id"));
        CHECK(item.contains("ring"));
        CHECK(item.contains("status"));
        CHECK_FALSE(item.contains("elapsed"));
        CHECK_FALSE(item.contains("elapsed_seconds"));
    }
}

TEST_CASE("individual checks pass on hand-picked rings") {
    SuiteOptions opts;
    opts.seed = 3;
    auto expect_pass = [](const CheckResult& r) {
        CAPTURE(r.check_id);
        CAPTURE(r.ring);
        CAPTURE(r.witness.dump());
        CHECK(r.status == CheckStatus::Pass);
    };
    expect_pass(check_nilpotent_class("M(2,GF(3))", opts));
    expect_pass(check_distance_law("M(2,GF(3))", opts));
    expect_pass(check_matrix_diameter("M(2,GF(3))", opts));
    expect_pass(check_unit_classes("M(2,GF(3))", opts));
    expect_pass(check_girth("M(3,GF(2))", opts));
    expect_pass(check_product_laws("Z(4)xM(2,GF(2))", opts));
    expect_pass(check_semisimple_diameter("M(2,GF(3))", opts));
    expect_pass(check_closed_families("Z(12)", opts));
    expect_pass(check_dedekind_finite("M(2,GF(2))", opts));
    expect_pass(check_level_nilpotency("M(3,GF(2))", opts));
    expect_pass(check_stabilization_bounds("M(2,GF(3))", opts));
    expect_pass(check_stable_association("Z(6)", opts));
    expect_pass(check_closure_identities("GF(9)", opts));
    expect_pass(check_path_association("M(2,GF(2))", opts));
    expect_pass(check_free_algebra_chain(opts));
}

TEST_CASE("bad ring specs and oversized rings are rejected up front") {
    SuiteOptions opts;
    CHECK_THROWS_AS(run_suite("identities", {"Q(5)"}, opts), SpecError);
    CHECK_THROWS_AS(run_suite("identities", {"M(3,GF(7))"}, opts),
                    SizeGuardError);
}
