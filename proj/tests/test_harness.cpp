#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gncring/gncring.hpp"
#include "oracles.hpp"

using namespace gncring;

namespace {

const std::set<std::string> self_supplied{"C10", "C12", "C20", "C23"};

Check injected_false_claim() {
    return {"X1", "every ring is gnc", [](Trial& t, const std::vector<RingExpr>& catalog) {
                for (const auto& e : catalog) {
                    const std::string expr = to_string(e);
                    t.on(expr, [&] {
                        t.claim(expr, "gnc & clean", {{expr, "clean"}, {expr, "gnc"}},
                                [](const std::vector<bool>& b) { return b[0] && b[1]; });
                    });
                }
            }};
}

} // namespace

TEST(Catalog, Contents) {
    auto cat = default_catalog();
    EXPECT_GE(cat.size(), 80u);
    EXPECT_EQ(std::set<std::string>(cat.begin(), cat.end()).size(), cat.size());
    for (const char* must : {"Zn(6)", "RG(Zn(3),C(2))", "M(2,Zn(9))", "Ms(2,Zn(4),2)", "Ks(Zn(2),0)",
                             "Prod(Zn(8),Zn(9))", "Bnm(Zn(4),2,2)", "RG(Zn(4),C(2)xC(2))"})
        EXPECT_NE(std::find(cat.begin(), cat.end(), must), cat.end()) << must;
    EXPECT_EQ(default_catalog(), cat);
    for (const auto& text : cat) EXPECT_EQ(to_string(parse_ring_expr(text)), text);
}

TEST(Catalog, CapacityFilter) {
    auto cat = default_catalog(100);
    EXPECT_EQ(std::find(cat.begin(), cat.end(), "M(2,Zn(4))"), cat.end());
    EXPECT_NE(std::find(cat.begin(), cat.end(), "Zn(64)"), cat.end());
    for (const auto& text : cat) EXPECT_LE(detail::carrier_size(parse_ring_expr(text)), 100u) << text;
}

TEST(Catalog, SizeEstimateMatchesConstruction) {
    for (const auto& text : default_catalog())
        EXPECT_EQ(detail::carrier_size(parse_ring_expr(text)), build_ring(text).size()) << text;
}

TEST(RunAll, EmptyCatalogPassesVacuously) {
    RingContext ctx;
    SuiteReport rep = run_all({}, ctx);
    ASSERT_EQ(rep.results.size(), 25u);
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
        const auto& r = rep.results[i];
        EXPECT_EQ(r.id, "C" + std::to_string(i + 1));
        EXPECT_EQ(r.status, CheckStatus::pass) << r.id;
        if (self_supplied.count(r.id)) EXPECT_GT(r.rings_examined, 0u) << r.id;
        else EXPECT_EQ(r.rings_examined, 0u) << r.id;
    }
    EXPECT_EQ(rep.summary.pass, 25u);
}

TEST(RunAll, SingleNonGncRing) {
    RingContext ctx;
    SuiteReport rep = run_all({"Zn(6)"}, ctx, default_checks(), {"C1", "C12"});
    ASSERT_EQ(rep.results.size(), 2u);
    EXPECT_EQ(rep.results[0].status, CheckStatus::pass);
    EXPECT_EQ(rep.results[0].rings_examined, 1u);
    EXPECT_EQ(rep.results[1].status, CheckStatus::pass);
    EXPECT_EQ(rep.results[1].rings_examined, 64u);
}

TEST(RunAll, UnknownCheckIdIsRejected) {
    RingContext ctx;
    EXPECT_THROW(run_all({}, ctx, default_checks(), {"C99"}), input_error);
}

TEST(RunAll, CapacitySkipsAreReported) {
    HarnessOptions opt;
    opt.build.carrier_cap = 100;
    RingContext ctx(opt);
    SuiteReport rep = run_all({"Zn(4)", "M(2,Zn(4))"}, ctx, default_checks(), {"C1"});
    ASSERT_EQ(rep.results.size(), 1u);
    EXPECT_EQ(rep.results[0].status, CheckStatus::skipped);
    EXPECT_EQ(rep.results[0].rings_examined, 1u);
    ASSERT_EQ(rep.results[0].skipped.size(), 1u);
    EXPECT_NE(rep.results[0].skipped[0].find("M(2,Zn(4))"), std::string::npos);
    EXPECT_EQ(rep.summary.skipped, 1u);
}

TEST(RunAll, InjectedFailureCarriesReplayableCertificate) {
    RingContext ctx;
    std::vector<Check> checks{injected_false_claim()};
    SuiteReport rep = run_all({"Zn(4)", "Zn(6)", "Zn(10)"}, ctx, checks);
    ASSERT_EQ(rep.results.size(), 1u);
    const CheckResult& r = rep.results[0];
    EXPECT_EQ(r.status, CheckStatus::fail);
    EXPECT_EQ(r.rings_examined, 2u); // stops at the first violation
    ASSERT_TRUE(r.counterexample);
    const CheckCertificate& c = *r.counterexample;
    EXPECT_EQ(c.ring, "Zn(6)");
    ASSERT_EQ(c.facts.size(), 2u);
    EXPECT_TRUE(c.facts[0].value);
    EXPECT_FALSE(c.facts[1].value);
    ASSERT_TRUE(c.detail);
    EXPECT_EQ(c.detail->elements, std::vector<Index>{2});
    EXPECT_EQ(c.decoded, std::vector<std::string>{"2"});
    EXPECT_TRUE(replay(c));

    CheckCertificate tampered = c;
    tampered.facts[1].value = true;
    EXPECT_FALSE(replay(tampered));
    EXPECT_EQ(rep.summary.fail, 1u);
}

TEST(RunAll, DeterministicAcrossRunsAndJobCounts) {
    const std::vector<std::string> cat{"Zn(4)", "Zn(6)", "M(2,Zn(2))", "T(2,Zn(3))", "RG(Zn(2),C(3))", "Triv(Zn(3))",
                                       "Prod(Zn(2),Zn(4))", "Ks(Zn(2),0)", "Ms(2,Zn(4),2)"};
    auto run = [&](unsigned jobs) {
        HarnessOptions opt;
        opt.jobs = jobs;
        RingContext ctx(opt);
        return suite_json(run_all(cat, ctx), false).dump();
    };
    const std::string first = run(1);
    EXPECT_EQ(run(1), first);
    EXPECT_EQ(run(4), first);
}

TEST(Facts, EveryNameEvaluates) {
    FiniteRing z3c2 = build_ring("RG(Zn(3),C(2))");
    // construction-scoped facts need a ring that carries the construction
    const std::map<std::string, std::string> host{{"nil_ideal_quotient_matches_base", "Triv(Zn(3))"},
                                                  {"twist_central_nilpotent", "Ks(Zn(4),2)"}};
    for (const auto& name : derived_fact_names()) {
        auto it = host.find(name);
        if (it == host.end()) {
            EXPECT_NO_THROW(evaluate_fact(z3c2, name)) << name;
        } else {
            EXPECT_NO_THROW(evaluate_fact(build_ring(it->second), name)) << name;
            EXPECT_THROW(evaluate_fact(z3c2, name), input_error) << name;
        }
    }
    for (Property p : all_properties) EXPECT_NO_THROW(evaluate_fact(z3c2, to_string(p)));
    EXPECT_THROW(evaluate_fact(z3c2, "no_such_fact"), input_error);
}

TEST(Facts, Values) {
    EXPECT_TRUE(evaluate_fact(build_zn(8), "order_is_one_or_prime_power").value);
    EXPECT_FALSE(evaluate_fact(build_zn(12), "order_is_one_or_prime_power").value);
    EXPECT_TRUE(evaluate_fact(build_zn(2), "is_Z2").value);
    EXPECT_FALSE(evaluate_fact(build_zn(3), "is_Z2").value);
    EXPECT_TRUE(evaluate_fact(build_ring("RG(Zn(2),C(4))"), "group_is_p_group_with_nil_p").value);
    EXPECT_FALSE(evaluate_fact(build_ring("RG(Zn(2),C(3))"), "group_is_p_group_with_nil_p").value);
    EXPECT_TRUE(evaluate_fact(build_ring("Ks(Zn(4),2)"), "twist_central_nilpotent").value);
    EXPECT_FALSE(evaluate_fact(build_ring("Ks(Zn(4),1)"), "twist_central_nilpotent").value);
    EXPECT_TRUE(evaluate_fact(build_ring("Triv(Zn(3))"), "nil_ideal_quotient_matches_base").value);
    EXPECT_TRUE(evaluate_fact(build_ring("RG(Zn(3),C(2))"), "z3c2_one_plus_g_refuted").value);
    EXPECT_FALSE(evaluate_fact(build_zn(1), "field_hypotheses").value);
}

TEST(Facts, IntegerImagesOracle) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        FiniteRing r = build_zn(n);
        bool expected = true;
        for (std::uint64_t k = 0; k <= 2 * n; ++k) {
            const Index img = Index(k % n);
            expected = expected && (oracle::naive_unit(r, img) || oracle::naive_nilpotent(r, img));
        }
        EXPECT_EQ(evaluate_fact(r, "integer_images_nil_or_unit").value, expected) << n;
        EXPECT_EQ(expected, n == 1 || oracle::is_prime_power(n)) << n;
    }
}

TEST(ScanZn, Examples) {
    auto rows = scan_zn(64);
    ASSERT_EQ(rows.size(), 64u);
    for (const auto& row : rows) {
        EXPECT_EQ(row.gnc, row.prime_power) << row.n;
        EXPECT_EQ(row.prime_power, row.n == 1 || oracle::is_prime_power(row.n)) << row.n;
    }
    EXPECT_TRUE(rows[7].gnc);
    EXPECT_EQ(rows[7].branch, SemilocalBranch::local_nil_J);
    EXPECT_FALSE(rows[11].gnc);
    EXPECT_EQ(rows[11].branch, SemilocalBranch::none);
    EXPECT_TRUE(rows[1].gnc);
    EXPECT_TRUE(ring_predicate(build_zn(2), Property::nil_clean).holds);
}

TEST(Checks, IdsAndAnchorsAreDistinct) {
    auto checks = default_checks();
    ASSERT_EQ(checks.size(), 25u);
    std::set<std::string> anchors;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        EXPECT_EQ(checks[i].id, "C" + std::to_string(i + 1));
        EXPECT_FALSE(checks[i].anchor.empty());
        anchors.insert(checks[i].anchor);
    }
    EXPECT_EQ(anchors.size(), checks.size());
}

TEST(Checks, PassOnSmallCatalogSlice) {
    // every check over the members of at most 64 elements
    std::vector<std::string> slice;
    for (const auto& text : default_catalog(64)) slice.push_back(text);
    RingContext ctx;
    SuiteReport rep = run_all(slice, ctx);
    for (const auto& r : rep.results) {
        EXPECT_EQ(r.status, CheckStatus::pass) << r.id;
        if (r.counterexample) ADD_FAILURE() << check_certificate_json(*r.counterexample).dump();
    }
}
