// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "gncring/gncring.hpp"
#include "oracles.hpp"

using namespace gncring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

bool gnc(const FiniteRing& r) { return is_gnc(r).holds; }
bool holds(const FiniteRing& r, Property p) { return ring_predicate(r, p).holds; }

bool suite_check_passes(const std::string& id, RingContext& ctx, Outcome& out) {
    SuiteReport rep = run_all(default_catalog(), ctx, default_checks(), {id});
    const CheckResult& r = rep.results.at(0);
    out.note << " " << id << "=" << to_string(r.status) << "/" << r.rings_examined;
    if (r.counterexample) out.note << " " << check_certificate_json(*r.counterexample).dump();
    return r.status == CheckStatus::pass;
}

std::set<Index> elements(const IndexSet& s) { return oracle::as_set(s); }

void criterion_1(Outcome& out) {
    auto t0 = Clock::now();
    int agree = 0;
    for (std::uint64_t n = 1; n <= 64; ++n) {
        // 1 = p^0 counts as a prime power: Z_1 is the zero ring, which is vacuously gnc
        const bool prime_power = n == 1 || oracle::is_prime_power(n);
        const bool verdict = gnc(build_zn(n));
        out.require(verdict == prime_power, "n=" + std::to_string(n));
        agree += verdict == prime_power;
    }
    const double s = seconds_since(t0);
    out.require(s < 1.0, "runtime");
    out.note << " " << agree << "/64 agree, " << s << " s";
}

void criterion_2(Outcome& out) {
    FiniteRing z3 = build_zn(3), z6 = build_zn(6);
    out.require(gnc(z3), "gnc(Z3)");
    out.require(!holds(z3, Property::nil_clean), "not nil_clean(Z3)");
    out.require(holds(z6, Property::clean), "clean(Z6)");
    Verdict v = is_gnc(z6);
    out.require(!v.holds, "not gnc(Z6)");
    out.require(v.certificate && v.certificate->elements == std::vector<Index>{2}, "failing element 2");
}

void criterion_3(Outcome& out) {
    out.require(gnc(build_ring("M(2,Zn(2))")), "gnc(M2(F2))");

    auto t0 = Clock::now();
    FiniteRing m3 = build_ring("M(2,Zn(3))");
    const Index diag20 = oracle::from_digits({2, 0, 0, 0}, 3);
    Verdict v = is_gnc(m3);
    auto d = decompose(m3, diag20, DecompositionKind::nil_clean);
    const double s = seconds_since(t0);
    out.require(m3.size() == 81, "81 elements");
    out.require(!v.holds, "not gnc(M2(F3))");
    out.require(!m3.sets().units.contains(diag20), "diag(2,0) non-unit");
    const auto* ref = std::get_if<Refutation>(&d);
    out.require(ref && ref->rows.size() == m3.sets().idempotents.size(), "diag(2,0) refuted over all idempotents");
    out.require(s < 1.0, "runtime");
    out.note << " M2(F3): least failing " << (v.certificate ? m3.format(v.certificate->elements.at(0)) : "?")
             << ", " << m3.format(diag20) << " refuted over " << (ref ? ref->rows.size() : 0) << " idempotents, " << s
             << " s";

    NamedRings named;
    named.emplace("F4", load_cayley_file(std::string(GNCRING_FIXTURES) + "/f4.json"));
    FiniteRing m4 = build_ring("M(2,F4)", {}, named);
    out.require(holds(named.at("F4"), Property::field), "fixture is a field");
    out.require(!gnc(m4), "not gnc(M2(F4))");
}

void criterion_4(Outcome& out) {
    FiniteRing r = build_ring("RG(Zn(3),C(2))");
    auto el = [](Index a, Index b) { return oracle::from_digits({a, b}, 3); };
    out.require(r.format(el(2, 1)) == "2+g" && r.format(el(2, 2)) == "2+2g", "element encoding");
    out.require(elements(r.sets().idempotents) == std::set<Index>{el(0, 0), el(1, 0), el(2, 1), el(2, 2)},
                "Id = {0,1,2+g,2+2g}");
    out.require(elements(r.sets().nilpotents) == std::set<Index>{0}, "Nil = {0}");
    const Index one_plus_g = el(1, 1);
    out.require(!oracle::naive_unit(r, one_plus_g), "1+g non-unit");
    auto d = decompose(r, one_plus_g, DecompositionKind::nil_clean);
    const auto* ref = std::get_if<Refutation>(&d);
    out.require(ref && ref->rows.size() == 4, "1+g refuted over 4 idempotents");
}

void criterion_5(Outcome& out, RingContext& ctx) {
    out.require(gnc(build_ring("T(2,Zn(2))")), "gnc(T2(Z2))");
    out.require(gnc(build_ring("T(3,Zn(2))")), "gnc(T3(Z2))");
    out.require(!gnc(build_ring("T(2,Zn(3))")), "not gnc(T2(Z3))");
    out.require(suite_check_passes("C17", ctx, out), "T_n biconditional on catalog");
}

void criterion_6(Outcome& out, RingContext& ctx) {
    out.require(gnc(build_ring("Prod(Zn(2),Zn(4))")), "gnc(Z2xZ4)");
    out.require(!gnc(build_ring("Prod(Zn(2),Zn(3))")), "not gnc(Z2xZ3)");
    out.require(suite_check_passes("C7", ctx, out), "product biconditional on catalog");
}

void criterion_7(Outcome& out) {
    out.require(gnc(build_ring("Ks(Zn(2),0)")), "gnc(K0(Z2))");
    out.require(!gnc(build_ring("Ks(Zn(3),0)")), "not gnc(K0(Z3))");
    FiniteRing ms = build_ring("Ms(2,Zn(4),2)");
    out.require(ms.same_tables(build_ring("Ks(Zn(4),0)")), "Ms(2,Z4,2) tables = Ks(Z4,0) tables");
    out.require(gnc(ms), "gnc(Ms(2,Z4,2))");
}

void criterion_8(Outcome& out) {
    auto t0 = Clock::now();
    RingContext ctx;
    auto cat = default_catalog();
    SuiteReport rep = run_all(cat, ctx);
    const double s = seconds_since(t0);
    out.require(rep.results.size() == 25, "25 checks");
    out.require(rep.summary.fail == 0, "0 failures");
    out.require(rep.summary.skipped == 0, "0 skipped");
    out.require(s < 60.0, "runtime");
    for (const auto& r : rep.results)
        if (r.status != CheckStatus::pass) out.note << " " << r.id << "=" << to_string(r.status);
    out.note << " " << rep.summary.pass << "/" << rep.results.size() << " pass on " << cat.size() << " rings, " << s
             << " s";
}

void criterion_9(Outcome& out) {
    FiniteRing z4 = build_zn(4);
    out.require(gnc(build_ring("M(2,Zn(4))")), "gnc(M2(Z4))");
    out.require(quotient_by_jacobson_is_boolean(z4) && squares_agree_modulo_jacobson(z4), "Z4/J Boolean");
    out.require(jacobson_is_nil(z4).holds, "J(Z4) nil");

    auto t0 = Clock::now();
    FiniteRing m = build_ring("M(2,Zn(9))");
    ValidationReport v = validate(m);
    const bool g = gnc(m);
    const double s = seconds_since(t0);
    FiniteRing z9 = build_zn(9);
    Quotient q = quotient_by_jacobson(z9);
    out.require(m.size() == 6561 && !m.materialized(), "6561 elements, lazy tables");
    out.require(v.valid && v.exhaustive(), "M2(Z9) validates");
    out.require(!g, "not gnc(M2(Z9))");
    out.require(q.ring.same_tables(build_zn(3)), "Z9/J = Z3");
    out.require(!quotient_by_jacobson_is_boolean(z9) && !squares_agree_modulo_jacobson(z9), "Z9/J not Boolean");
    out.require(s < 30.0, "runtime");
    out.note << " M2(Z9) build+validate(" << to_string(v.mode) << ")+gnc " << s << " s";
}

void criterion_10(Outcome& out, RingContext& ctx) {
    for (const char* text : {"RG(Zn(2),C(2))", "RG(Zn(4),C(2))", "RG(Zn(2),C(4))", "RG(Zn(2),C(2)xC(2))"})
        out.require(gnc(build_ring(text)), std::string("gnc ") + text);
    out.require(!gnc(build_ring("RG(Zn(2),C(3))")), "not gnc(Z2C3)");
    FiniteRing z2 = build_zn(2);
    out.require(z2.sets().units.contains(z2.times(3, z2.one())), "3*1 unit in Z2");
    out.require(suite_check_passes("C25", ctx, out), "RG/augmentation ideal = R on catalog");
}

void criterion_11(Outcome& out) {
    for (const char* base : {"Zn(2)", "Zn(3)", "Zn(4)"}) {
        const std::string b = base;
        FiniteRing s2 = build_ring("S(2," + b + ")"), triv = build_ring("Triv(" + b + ")"),
                   rn = build_ring("Rn(" + b + ",2)");
        out.require(s2.same_tables(triv) && triv.same_tables(rn) && rn.same_tables(s2), "S2/Triv/Rn2 over " + b);
        out.require(build_ring("Ks(" + b + ",1)").same_tables(build_ring("M(2," + b + ")")), "Ks(R,1) = M2(R) over " + b);
    }
    std::size_t exhaustive = 0, reduced = 0;
    for (const auto& text : default_catalog()) {
        ValidationReport v = validate(build_ring(text));
        out.require(v.valid, text + " valid");
        out.require(v.exhaustive(), text + " checked completely");
        (v.mode == ValidationMode::exhaustive ? exhaustive : reduced) += 1;
    }
    out.note << " catalog: " << exhaustive << " exhaustive triple checks, " << reduced
             << " generator-reduced complete checks";
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<void(Outcome&)> run;
    };
    RingContext ctx;
    const std::vector<Criterion> criteria{
        {1, "Z_n scan n <= 64: gnc iff prime power", criterion_1},
        {2, "Z_3 gnc not nil-clean; Z_6 clean not gnc, failing element 2", criterion_2},
        {3, "M_2(F_2) gnc; M_2(F_3), M_2(F_4) not gnc", criterion_3},
        {4, "Z_3 C_2 idempotents, nilpotents and 1+g", criterion_4},
        {5, "triangular matrix rings", [&](Outcome& o) { criterion_5(o, ctx); }},
        {6, "direct products", [&](Outcome& o) { criterion_6(o, ctx); }},
        {7, "K_s and M_n(R;s)", criterion_7},
        {8, "full suite on the default catalog", criterion_8},
        {9, "M_2(Z_4) gnc, M_2(Z_9) not gnc", criterion_9},
        {10, "group rings", [&](Outcome& o) { criterion_10(o, ctx); }},
        {11, "construction cross-validation and catalog validation", criterion_11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.note << " [exception: " << e.what() << "]";
        }
        failures += !out.ok;
        std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " --"
                  << out.note.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
