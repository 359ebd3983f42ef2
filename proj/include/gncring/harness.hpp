#pragma once

/**
 * @file harness.hpp
 * @brief Executable checks C1..C25 over a catalog of ring expressions.
 *
 * A check evaluates named boolean facts about rings ("gnc", "jacobson_nil", ...) and
 * combines them into a claim. A violated claim yields a certificate listing every fact
 * it used with its value; replaying the certificate recomputes those facts from the
 * ring expressions.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gncring/cayley_json.hpp"
#include "gncring/classifiers.hpp"
#include "gncring/constructions.hpp"
#include "gncring/expr.hpp"
#include "gncring/validate.hpp"

namespace gncring {

// ---------------------------------------------------------------------------
// facts

struct FactValue {
    bool value = false;
    std::optional<Certificate> certificate;
    std::string note;
};

namespace detail {

/// The prime p with n = p^k (k >= 1), or 0.
inline std::uint64_t prime_of_power(std::uint64_t n) {
    if (n < 2) return 0;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

/// Additive order of one.
inline std::uint64_t characteristic(const FiniteRing& r) {
    std::uint64_t c = 1;
    for (Index x = r.one(); x != r.zero(); x = r.add(x, r.one())) ++c;
    return c;
}

inline FactValue from_verdict(const Verdict& v) { return {v.holds, v.certificate, {}}; }

inline FactValue with_note(bool value, std::string note = {}) { return {value, std::nullopt, std::move(note)}; }

inline const GroupRingInfo& group_ring_info(const FiniteRing& ring) {
    const auto* info = ring.structure<GroupRingInfo>();
    if (!info) throw input_error(ring.label() + " is not a group ring");
    return *info;
}

inline FactValue z3c2_fact(const FiniteRing& ring, const std::string& name) {
    const auto& info = group_ring_info(ring);
    if (info.group.size() != 2 || info.base.size() != 3)
        throw input_error(name + " applies only to a group ring of C(2) over a ring of order 3");
    const auto& s = ring.sets();
    auto element = [&](Index a, Index b) { return group_ring_element(ring, {a, b}); };
    const Index one_plus_g = element(1, 1);
    if (name == "z3c2_idempotents_exact") {
        IndexSet want = IndexSet::from_list(ring.size(), {element(0, 0), element(1, 0), element(2, 1), element(2, 2)});
        return with_note(s.idempotents == want);
    }
    if (name == "z3c2_nilpotents_exact") return with_note(s.nilpotents == IndexSet::from_list(ring.size(), {ring.zero()}));
    if (name == "z3c2_one_plus_g_nonunit") return with_note(!s.units.contains(one_plus_g));
    // z3c2_one_plus_g_refuted
    auto r = decompose(ring, one_plus_g, DecompositionKind::nil_clean);
    const auto* ref = std::get_if<Refutation>(&r);
    bool covered = ref && ref->rows.size() == s.idempotents.size();
    FactValue v = with_note(covered);
    if (ref) v.certificate = Certificate{CertificateKind::failing_element, {one_plus_g}, *ref, "no nil_clean decomposition"};
    return v;
}

} // namespace detail

/// Names accepted by evaluate_fact, in addition to every Property name.
inline const std::vector<std::string>& derived_fact_names() {
    static const std::vector<std::string> names{
        "jacobson_nil",
        "local_nil_J",
        "trivial_idempotents",
        "commutative",
        "field_hypotheses",
        "integer_images_nil_or_unit",
        "nil_plus_jacobson_nil",
        "semilocal_branch_assigned",
        "quotient_is_matrix_over_Z2",
        "boolean_mod_J_quotient",
        "boolean_mod_J_squares",
        "order_is_one_or_prime_power",
        "is_Z2",
        "nil_ideal_quotient_matches_base",
        "augmentation_quotient_matches_base",
        "group_is_p_group_with_nil_p",
        "twist_central_nilpotent",
        "z3c2_idempotents_exact",
        "z3c2_nilpotents_exact",
        "z3c2_one_plus_g_nonunit",
        "z3c2_one_plus_g_refuted",
    };
    return names;
}

inline FactValue evaluate_fact(const FiniteRing& ring, const std::string& name) {
    using detail::with_note;
    for (Property p : all_properties)
        if (name == to_string(p)) return detail::from_verdict(ring_predicate(ring, p));

    const auto& s = ring.sets();
    const Index n = ring.size();
    if (name == "jacobson_nil") return detail::from_verdict(jacobson_is_nil(ring));
    if (name == "local_nil_J") {
        Verdict l = ring_predicate(ring, Property::local);
        if (!l.holds) return detail::from_verdict(l);
        return detail::from_verdict(jacobson_is_nil(ring));
    }
    if (name == "trivial_idempotents") return with_note(s.idempotents.size() <= 2);
    if (name == "commutative") return with_note(s.center.size() == n);
    if (name == "field_hypotheses") {
        if (n == 1) return with_note(false, "zero ring");
        if (!s.units.contains(ring.times(2, ring.one()))) return with_note(false, "2 is not a unit");
        for (Index u : s.units)
            if (ring.mul(u, u) != ring.one()) return with_note(false, "unit " + ring.format(u) + " with u^2 != 1");
        return with_note(true);
    }
    if (name == "integer_images_nil_or_unit") {
        for (std::uint64_t k = 0; k <= 2ull * n; ++k) {
            Index x = ring.times(k, ring.one());
            if (!s.nilpotents.contains(x) && !s.units.contains(x))
                return with_note(false, std::to_string(k) + "*1 is neither nilpotent nor a unit");
        }
        return with_note(true);
    }
    if (name == "nil_plus_jacobson_nil") {
        for (Index q : s.nilpotents)
            for (Index j : s.jacobson)
                if (!s.nilpotents.contains(ring.add(q, j)))
                    return {false, Certificate{CertificateKind::failing_element, {q, j}, std::nullopt, "q+j not nilpotent"}, {}};
        return with_note(true);
    }
    if (name == "semilocal_branch_assigned" || name == "quotient_is_matrix_over_Z2") {
        SemilocalAnalysis a = analyze_semilocal(ring);
        std::string note = std::string("branch ") + to_string(a.branch) + "; local_nil_J " +
                           (a.local_nil_J ? "yes" : "no") + ", nil_clean " + (a.nil_clean ? "yes" : "no") +
                           ", quotient M_n(Z2) " + (a.quotient_is_matrix_over_Z2 ? "yes" : "no");
        if (name == "semilocal_branch_assigned") return with_note(a.branch != SemilocalBranch::none, note);
        return with_note(a.quotient_is_matrix_over_Z2, note);
    }
    if (name == "boolean_mod_J_quotient") return with_note(quotient_by_jacobson_is_boolean(ring));
    if (name == "boolean_mod_J_squares") return with_note(squares_agree_modulo_jacobson(ring));
    if (name == "order_is_one_or_prime_power") return with_note(n == 1 || detail::prime_of_power(n) != 0);
    if (name == "is_Z2") return with_note(n == 2);
    if (name == "nil_ideal_quotient_matches_base") {
        const auto* info = ring.structure<LeadingCoordinateInfo>();
        if (!info) throw input_error(ring.label() + " has no designated nil ideal");
        IndexSet ideal = leading_coordinate_ideal(ring);
        if (!ideal.is_subset_of(s.nilpotents)) return with_note(false, "ideal is not nil");
        Quotient q = quotient(ring, ideal);
        std::vector<Index> map(info->base.size());
        for (Index r = 0; r < info->base.size(); ++r) map[r] = q.class_of[r * info->block];
        return with_note(tables_equal_under(info->base, q.ring, map), "quotient by the leading-coordinate ideal");
    }
    if (name == "augmentation_quotient_matches_base") {
        const auto& info = detail::group_ring_info(ring);
        Quotient q = quotient(ring, augmentation_ideal(ring), "D");
        std::vector<Index> map(info.base.size());
        for (Index r = 0; r < info.base.size(); ++r) {
            std::vector<Index> c(info.group.size(), info.base.zero());
            c[info.group.identity()] = r;
            map[r] = q.class_of[group_ring_element(ring, c)];
        }
        return with_note(tables_equal_under(info.base, q.ring, map));
    }
    if (name == "group_is_p_group_with_nil_p") {
        const auto& info = detail::group_ring_info(ring);
        const FiniteRing& base = info.base;
        std::uint64_t p = 0;
        if (info.group.size() > 1) {
            p = detail::prime_of_power(info.group.size());
            if (p == 0) return with_note(false, "group order is not a prime power");
        } else {
            std::uint64_t c = detail::characteristic(base);
            if (c == 1) return with_note(true, "zero coefficient ring");
            p = detail::prime_of_power(c);
            if (p == 0) return with_note(false, "no prime p with p*1 nilpotent");
        }
        bool nil = base.sets().nilpotents.contains(base.times(p, base.one()));
        return with_note(nil, "p = " + std::to_string(p));
    }
    if (name == "twist_central_nilpotent") {
        const auto* info = ring.structure<FormalMatrixInfo>();
        if (!info) throw input_error(ring.label() + " is not a twisted matrix ring");
        const auto& bs = info->base.sets();
        return with_note(bs.center.contains(info->s) && bs.nilpotents.contains(info->s));
    }
    if (name.rfind("z3c2_", 0) == 0) {
        const auto& names = derived_fact_names();
        if (std::find(names.begin(), names.end(), name) != names.end()) return detail::z3c2_fact(ring, name);
    }
    throw input_error("unknown fact '" + name + "'");
}

// ---------------------------------------------------------------------------
// catalog

/// The default catalog, restricted to expressions whose carrier fits under `cap`.
inline std::vector<std::string> default_catalog(std::uint64_t cap = BuildOptions{}.carrier_cap);

namespace detail {

/// Carrier size of an expression without building it (saturating at 2^64-1).
inline std::uint64_t carrier_size(const RingExpr& e, const NamedRings& named = {}) {
    auto mul = [](std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > std::uint64_t(-1) / a) return std::uint64_t(-1);
        return a * b;
    };
    auto power = [&](std::uint64_t base, std::uint64_t k) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < k; ++i) r = mul(r, base);
        return r;
    };
    auto sub = [&](std::size_t i) { return carrier_size(e.args.at(i), named); };
    switch (e.kind) {
    case ExprKind::zn: return e.ints[0];
    case ExprKind::prod: {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e.args.size(); ++i) r = mul(r, sub(i));
        return r;
    }
    case ExprKind::matrix: return power(sub(0), e.ints[0] * e.ints[0]);
    case ExprKind::upper: return power(sub(0), e.ints[0] * (e.ints[0] + 1) / 2);
    case ExprKind::upper_const_diag: return power(sub(0), 1 + e.ints[0] * (e.ints[0] - 1) / 2);
    case ExprKind::triv: return power(sub(0), 2);
    case ExprKind::rn: return power(sub(0), e.ints[0]);
    case ExprKind::anm: return power(sub(0), e.ints[0] + e.ints[1] - 1);
    case ExprKind::bnm: return power(sub(0), e.ints[0] * e.ints[1]);
    case ExprKind::ks: return power(sub(0), 4);
    case ExprKind::ms: return power(sub(0), e.ints[0] * e.ints[0]);
    case ExprKind::tt: return mul(mul(sub(0), sub(1)), e.mod == "zero" ? 1 : sub(1));
    case ExprKind::rg: {
        std::uint64_t g = 1;
        for (auto o : e.group) g = mul(g, o);
        return power(sub(0), g);
    }
    case ExprKind::named: {
        auto it = named.find(e.name);
        return it == named.end() ? 0 : it->second.size();
    }
    }
    return 0;
}

} // namespace detail

inline std::vector<std::string> default_catalog(std::uint64_t cap) {
    std::vector<std::string> out;
    auto zn = [](int n) { return "Zn(" + std::to_string(n) + ")"; };
    for (int n = 1; n <= 64; ++n) out.push_back(zn(n));
    const int pair_bases[] = {2, 3, 4, 8, 9};
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) out.push_back("Prod(" + zn(pair_bases[i]) + "," + zn(pair_bases[j]) + ")");
    for (int k : {2, 3, 4, 9}) out.push_back("M(2," + zn(k) + ")");
    const int small[] = {2, 3, 4};
    for (const char* c : {"T", "S"})
        for (int n : {2, 3})
            for (int b : small) out.push_back(std::string(c) + "(" + std::to_string(n) + "," + zn(b) + ")");
    for (int b : small) {
        out.push_back("Triv(" + zn(b) + ")");
        out.push_back("Rn(" + zn(b) + ",2)");
        out.push_back("Rn(" + zn(b) + ",3)");
        out.push_back("Anm(" + zn(b) + ",2,2)");
        out.push_back("Bnm(" + zn(b) + ",2,2)");
    }
    for (const char* c : {"Ks", "Ms"}) {
        auto twisted = [&](int b, int s) {
            return std::string(c) == "Ks" ? "Ks(" + zn(b) + "," + std::to_string(s) + ")"
                                           : "Ms(2," + zn(b) + "," + std::to_string(s) + ")";
        };
        for (int s : {0, 1}) out.push_back(twisted(2, s));
        for (int s : {0, 1, 2, 3}) out.push_back(twisted(4, s));
    }
    for (int b : small)
        for (const char* g : {"C(2)", "C(3)", "C(4)", "C(2)xC(2)"})
            out.push_back("RG(" + zn(b) + "," + g + ")");
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const std::string& s) { return detail::carrier_size(parse_ring_expr(s)) > cap; }),
              out.end());
    return out;
}

/// Rings referenced by name in the harness's own families.
inline NamedRings default_named_rings() {
    NamedRings named;
    named.emplace("F4", load_cayley_json(f4_cayley_json()));
    return named;
}

// ---------------------------------------------------------------------------
// results

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct FactRecord {
    std::string ring;
    std::string fact;
    bool value = false;
    std::string note;
};

/// A violated claim: the facts it read, with the certificate of the first false predicate.
struct CheckCertificate {
    std::string ring;
    std::string claim;
    std::vector<FactRecord> facts;
    std::optional<Certificate> detail;
    std::string detail_ring;
    std::vector<std::string> decoded; // detail elements in structured form
};

struct CheckResult {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::pass;
    std::uint64_t rings_examined = 0;
    std::optional<CheckCertificate> counterexample;
    std::vector<std::string> skipped; // expressions over capacity, with the reason
    double runtime_ms = 0;
};

struct HarnessOptions {
    BuildOptions build;
    ValidationOptions validation;
    bool validate_rings = true;
    unsigned jobs = 1;
};

// ---------------------------------------------------------------------------
// ring and fact cache

class RingContext {
public:
    explicit RingContext(HarnessOptions opt = {}, NamedRings named = default_named_rings())
        : opt_(std::move(opt)), named_(std::move(named)) {}

    const HarnessOptions& options() const { return opt_; }
    const NamedRings& named() const { return named_; }

    /// Builds (once) the ring of a canonical expression; throws capacity_error or input_error.
    FiniteRing ring(const std::string& expr) {
        {
            std::lock_guard lock(mutex_);
            auto it = rings_.find(expr);
            if (it != rings_.end()) return it->second;
        }
        FiniteRing r = build_ring(expr, opt_.build, named_);
        if (opt_.validate_rings) {
            ValidationReport rep = validate(r, opt_.validation);
            if (!rep.valid) throw input_error(expr + " violates " + rep.axiom);
        }
        std::lock_guard lock(mutex_);
        return rings_.emplace(expr, std::move(r)).first->second;
    }

    FactValue fact(const std::string& expr, const std::string& name) {
        const auto key = std::make_pair(expr, name);
        {
            std::lock_guard lock(mutex_);
            auto it = facts_.find(key);
            if (it != facts_.end()) return it->second;
        }
        FactValue v = evaluate_fact(ring(expr), name);
        std::lock_guard lock(mutex_);
        return facts_.emplace(key, std::move(v)).first->second;
    }

private:
    HarnessOptions opt_;
    NamedRings named_;
    std::mutex mutex_;
    std::map<std::string, FiniteRing> rings_;
    std::map<std::pair<std::string, std::string>, FactValue> facts_;
};

// ---------------------------------------------------------------------------
// checks

struct FactRef {
    std::string ring;
    std::string fact;
};

/// Mutable state of one check run.
class Trial {
public:
    explicit Trial(RingContext& ctx) : ctx_(ctx) {}

    RingContext& context() { return ctx_; }
    bool failed() const { return counterexample_.has_value(); }

    /// Evaluates facts and the claim over their values; records a counterexample when it is false.
    bool claim(const std::string& ring, const std::string& text, const std::vector<FactRef>& refs,
               const std::function<bool(const std::vector<bool>&)>& holds) {
        std::vector<FactValue> values;
        std::vector<bool> bits;
        for (const auto& r : refs) {
            values.push_back(ctx_.fact(r.ring, r.fact));
            bits.push_back(values.back().value);
        }
        if (holds(bits)) return true;
        CheckCertificate c{ring, text, {}, std::nullopt, {}, {}};
        for (std::size_t i = 0; i < refs.size(); ++i) {
            c.facts.push_back({refs[i].ring, refs[i].fact, bits[i], values[i].note});
            if (!c.detail && values[i].certificate && !bits[i]) {
                c.detail = values[i].certificate;
                c.detail_ring = refs[i].ring;
            }
        }
        if (c.detail) {
            FiniteRing r = ctx_.ring(c.detail_ring);
            for (Index x : c.detail->elements) c.decoded.push_back(r.format(x));
        }
        counterexample_ = std::move(c);
        return false;
    }

    /// Runs body on one ring expression, counting it, or records a capacity skip.
    template <class F>
    void on(const std::string& expr, F&& body) {
        if (failed()) return;
        try {
            ctx_.ring(expr);
            ++examined_;
            body();
        } catch (const capacity_error& e) {
            skipped_.push_back(expr + ": " + e.what());
        }
    }

    CheckResult finish(std::string id, std::string anchor) && {
        CheckResult r;
        r.id = std::move(id);
        r.anchor = std::move(anchor);
        r.rings_examined = examined_;
        r.skipped = std::move(skipped_);
        r.counterexample = std::move(counterexample_);
        r.status = r.counterexample ? CheckStatus::fail : r.skipped.empty() ? CheckStatus::pass : CheckStatus::skipped;
        return r;
    }

private:
    RingContext& ctx_;
    std::uint64_t examined_ = 0;
    std::vector<std::string> skipped_;
    std::optional<CheckCertificate> counterexample_;
};

struct Check {
    std::string id;
    std::string anchor;
    std::function<void(Trial&, const std::vector<RingExpr>& catalog)> run;
};

namespace detail {

inline std::vector<std::string> canonical_of(const std::vector<RingExpr>& catalog,
                                             const std::function<bool(const RingExpr&)>& keep) {
    std::vector<std::string> out;
    for (const auto& e : catalog)
        if (keep(e)) out.push_back(to_string(e));
    return out;
}

inline std::vector<std::string> all_of(const std::vector<RingExpr>& catalog) {
    return canonical_of(catalog, [](const RingExpr&) { return true; });
}

inline bool implies(bool a, bool b) { return !a || b; }

/// Ring-wise check: claim over facts of the ring itself.
inline void per_ring(Trial& t, const std::vector<std::string>& family, const std::string& text,
                     const std::vector<std::string>& facts, const std::function<bool(const std::vector<bool>&)>& holds) {
    for (const auto& expr : family)
        t.on(expr, [&] {
            std::vector<FactRef> refs;
            for (const auto& f : facts) refs.push_back({expr, f});
            t.claim(expr, text, refs, holds);
        });
}

inline std::string base_of(const RingExpr& e, std::size_t i = 0) { return to_string(e.args.at(i)); }

} // namespace detail

/// One row of the Z_n scan.
struct ZnScanRow {
    std::uint64_t n = 0;
    bool gnc = false;
    bool prime_power = false; // n = 1 counts as p^0
    SemilocalBranch branch = SemilocalBranch::none;
};

inline std::vector<ZnScanRow> scan_zn(std::uint64_t max_n, const BuildOptions& opt = {}) {
    if (max_n < 1) throw input_error("scan-zn: max must be at least 1");
    std::vector<ZnScanRow> rows;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        FiniteRing r = build_zn(n, opt);
        ZnScanRow row;
        row.n = n;
        row.gnc = is_gnc(r).holds;
        row.prime_power = n == 1 || detail::prime_of_power(n) != 0;
        row.branch = semilocal_branch(r);
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<Check> default_checks() {
    using detail::implies;
    using detail::per_ring;
    using Catalog = std::vector<RingExpr>;
    using Bits = std::vector<bool>;
    std::vector<Check> checks;

    checks.push_back({"C1", "gnc implies clean", [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc => clean", {"gnc", "clean"},
                                   [](const Bits& b) { return implies(b[0], b[1]); });
                      }});
    checks.push_back({"C2", "gnc implies J(R) nil", [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc => jacobson_nil", {"gnc", "jacobson_nil"},
                                   [](const Bits& b) { return implies(b[0], b[1]); });
                      }});
    checks.push_back({"C3", "integer multiples of 1 are nilpotent or units in gnc rings",
                      [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc => integer_images_nil_or_unit",
                                   {"gnc", "integer_images_nil_or_unit"},
                                   [](const Bits& b) { return implies(b[0], b[1]); });
                      }});
    checks.push_back({"C4", "gnc, 2 a unit and u^2 = 1 for all units implies field", [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc & field_hypotheses => field",
                                   {"gnc", "field_hypotheses", "field"},
                                   [](const Bits& b) { return implies(b[0] && b[1], b[2]); });
                      }});
    checks.push_back({"C5", "Nil(R) + J(R) = Nil(R) in gnc rings", [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc => nil_plus_jacobson_nil",
                                   {"gnc", "nil_plus_jacobson_nil"},
                                   [](const Bits& b) { return implies(b[0], b[1]); });
                      }});
    checks.push_back({"C6", "R gnc iff R/I gnc for a nil ideal I", [](Trial& t, const Catalog& c) {
                          for (const auto& e : c) {
                              if (e.kind != ExprKind::triv && e.kind != ExprKind::upper_const_diag &&
                                  e.kind != ExprKind::rn && e.kind != ExprKind::anm && e.kind != ExprKind::bnm)
                                  continue;
                              if (e.kind == ExprKind::upper_const_diag && e.ints[0] < 2) continue;
                              const std::string expr = to_string(e), base = detail::base_of(e);
                              t.on(expr, [&] {
                                  if (!t.claim(expr, "quotient by the nil ideal has the base ring's tables",
                                               {{expr, "nil_ideal_quotient_matches_base"}},
                                               [](const Bits& b) { return b[0]; }))
                                      return;
                                  t.claim(expr, "gnc(R) <=> gnc(R/I)", {{expr, "gnc"}, {base, "gnc"}},
                                          [](const Bits& b) { return b[0] == b[1]; });
                              });
                          }
                      }});
    checks.push_back({"C7", "a product of two or more rings is gnc iff every factor is nil-clean",
                      [](Trial& t, const Catalog& c) {
                          for (const auto& e : c) {
                              if (e.kind != ExprKind::prod || e.args.size() < 2) continue;
                              const std::string expr = to_string(e);
                              t.on(expr, [&] {
                                  std::vector<FactRef> refs{{expr, "gnc"}};
                                  for (std::size_t i = 0; i < e.args.size(); ++i)
                                      refs.push_back({detail::base_of(e, i), "nil_clean"});
                                  t.claim(expr, "gnc(prod) <=> all factors nil_clean", refs, [](const Bits& b) {
                                      return b[0] == std::all_of(b.begin() + 1, b.end(), [](bool x) { return x; });
                                  });
                              });
                          }
                      }});
    checks.push_back({"C8", "trivial extension, S_n, R_n, A_nm, B_nm are gnc iff the base ring is",
                      [](Trial& t, const Catalog& c) {
                          for (const auto& e : c) {
                              bool family = e.kind == ExprKind::triv || e.kind == ExprKind::rn ||
                                            e.kind == ExprKind::anm || e.kind == ExprKind::bnm ||
                                            (e.kind == ExprKind::upper_const_diag && e.ints[0] >= 2);
                              if (!family) continue;
                              const std::string expr = to_string(e), base = detail::base_of(e);
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(construction) <=> gnc(base)", {{expr, "gnc"}, {base, "gnc"}},
                                          [](const Bits& b) { return b[0] == b[1]; });
                              });
                          }
                      }});
    checks.push_back({"C9", "with only trivial idempotents: gnc iff local with J(R) nil",
                      [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "trivial_idempotents => (gnc <=> local_nil_J)",
                                   {"trivial_idempotents", "gnc", "local_nil_J"},
                                   [](const Bits& b) { return implies(b[0], b[1] == b[2]); });
                      }});
    checks.push_back({"C10", "M_n(D) over a finite field D is gnc iff D = Z_2", [](Trial& t, const Catalog&) {
                          for (const char* d : {"Zn(2)", "Zn(3)", "F4"})
                              for (int n : {2, 3}) {
                                  if (n == 3 && std::string(d) != "Zn(2)") continue;
                                  const std::string expr = "M(" + std::to_string(n) + "," + d + ")";
                                  t.on(expr, [&] {
                                      if (!t.claim(expr, "coefficient ring is a field", {{d, "field"}},
                                                   [](const Bits& b) { return b[0]; }))
                                          return;
                                      t.claim(expr, "gnc(M_n(D)) <=> D = Z2", {{expr, "gnc"}, {d, "is_Z2"}},
                                              [](const Bits& b) { return b[0] == b[1]; });
                                  });
                              }
                      }});
    checks.push_back({"C11", "finite rings: gnc iff local with nil J, R/J = M_n(Z2) with nil J, or nil-clean",
                      [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "gnc <=> semilocal_branch_assigned",
                                   {"gnc", "semilocal_branch_assigned"}, [](const Bits& b) { return b[0] == b[1]; });
                      }});
    checks.push_back({"C12", "Z_n is gnc iff n is a prime power", [](Trial& t, const Catalog&) {
                          for (int n = 1; n <= 64; ++n) {
                              const std::string expr = "Zn(" + std::to_string(n) + ")";
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc <=> order_is_one_or_prime_power",
                                          {{expr, "gnc"}, {expr, "order_is_one_or_prime_power"}},
                                          [](const Bits& b) { return b[0] == b[1]; });
                              });
                          }
                      }});
    checks.push_back({"C13", "abelian rings: gnc iff local with nil J or strongly nil-clean",
                      [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "abelian => (gnc <=> local_nil_J | strongly_nil_clean)",
                                   {"abelian", "gnc", "local_nil_J", "strongly_nil_clean"},
                                   [](const Bits& b) { return implies(b[0], b[1] == (b[2] || b[3])); });
                      }});
    checks.push_back({"C14", "NR rings: gnc iff local with nil J or strongly nil-clean; NR iff NI for gnc rings",
                      [](Trial& t, const Catalog& c) {
                          for (const auto& expr : detail::all_of(c))
                              t.on(expr, [&] {
                                  if (!t.claim(expr, "nr => (gnc <=> local_nil_J | strongly_nil_clean)",
                                               {{expr, "nr"}, {expr, "gnc"}, {expr, "local_nil_J"},
                                                {expr, "strongly_nil_clean"}},
                                               [](const Bits& b) { return implies(b[0], b[1] == (b[2] || b[3])); }))
                                      return;
                                  if (!t.claim(expr, "gnc => (nr <=> ni)", {{expr, "gnc"}, {expr, "nr"}, {expr, "ni"}},
                                               [](const Bits& b) { return implies(b[0], b[1] == b[2]); }))
                                      return;
                                  t.claim(expr, "gnc & nr => two_primal_finite",
                                          {{expr, "gnc"}, {expr, "nr"}, {expr, "two_primal_finite"}},
                                          [](const Bits& b) { return implies(b[0] && b[1], b[2]); });
                              });
                      }});
    checks.push_back({"C15", "strongly nil-clean iff UU and gnc", [](Trial& t, const Catalog& c) {
                          per_ring(t, detail::all_of(c), "strongly_nil_clean <=> uu & gnc",
                                   {"strongly_nil_clean", "uu", "gnc"},
                                   [](const Bits& b) { return b[0] == (b[1] && b[2]); });
                      }});
    checks.push_back({"C16", "M_n(R), R commutative: gnc iff R/J(R) Boolean and J(R) nil",
                      [](Trial& t, const Catalog& c) {
                          for (const auto& e : c) {
                              if (e.kind != ExprKind::matrix || e.ints[0] < 2) continue;
                              const std::string expr = to_string(e), base = detail::base_of(e);
                              t.on(expr, [&] {
                                  t.context().ring(base);
                                  if (!t.context().fact(base, "commutative").value) return;
                                  if (!t.claim(base, "R/J Boolean computed on the quotient and modulo J agree",
                                               {{base, "boolean_mod_J_quotient"}, {base, "boolean_mod_J_squares"}},
                                               [](const Bits& b) { return b[0] == b[1]; }))
                                      return;
                                  t.claim(expr, "gnc(M_n(R)) <=> boolean(R/J) & jacobson_nil(R)",
                                          {{expr, "gnc"}, {base, "boolean_mod_J_quotient"}, {base, "jacobson_nil"}},
                                          [](const Bits& b) { return b[0] == (b[1] && b[2]); });
                              });
                          }
                      }});
    checks.push_back({"C17", "T_n(R) is gnc iff R is nil-clean", [](Trial& t, const Catalog& c) {
                          for (const auto& e : c) {
                              if (e.kind != ExprKind::upper) continue;
                              const std::string expr = to_string(e), base = detail::base_of(e);
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(T_n(R)) <=> nil_clean(R)", {{expr, "gnc"}, {base, "nil_clean"}},
                                          [](const Bits& b) { return b[0] == b[1]; });
                              });
                          }
                      }});
    auto twisted = [](ExprKind kind, const char* text) {
        return [kind, text](Trial& t, const Catalog& c) {
            for (const auto& e : c) {
                if (e.kind != kind) continue;
                const std::string expr = to_string(e), base = detail::base_of(e);
                t.on(expr, [&] {
                    t.claim(expr, text, {{expr, "twist_central_nilpotent"}, {expr, "gnc"}, {base, "nil_clean"}},
                            [](const Bits& b) { return implies(b[0], b[1] == b[2]); });
                });
            }
        };
    };
    checks.push_back({"C18", "K_s(R) with s central nilpotent is gnc iff R is nil-clean",
                      twisted(ExprKind::ks, "twist_central_nilpotent => (gnc(K_s(R)) <=> nil_clean(R))")});
    checks.push_back({"C19", "M_n(R;s) with s central nilpotent is gnc iff R is nil-clean",
                      twisted(ExprKind::ms, "twist_central_nilpotent => (gnc(M_n(R;s)) <=> nil_clean(R))")});
    checks.push_back({"C20", "T(R,S,M) is gnc iff R and S are nil-clean", [](Trial& t, const Catalog&) {
                          const char* bases[] = {"Zn(2)", "Zn(3)", "Zn(4)"};
                          std::vector<std::array<std::string, 3>> family;
                          for (const char* r : bases)
                              for (const char* s : bases) family.push_back({r, s, "zero"});
                          for (const char* r : bases) family.push_back({r, r, "regular"});
                          family.push_back({"Zn(4)", "Zn(2)", "regular"});
                          for (const auto& [r, s, m] : family) {
                              const std::string expr = "TT(" + r + "," + s + "," + m + ")";
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(T(R,S,M)) <=> nil_clean(R) & nil_clean(S)",
                                          {{expr, "gnc"}, {r, "nil_clean"}, {s, "nil_clean"}},
                                          [](const Bits& b) { return b[0] == (b[1] && b[2]); });
                              });
                          }
                      }});
    auto group_rings = [](const Catalog& c) {
        return detail::canonical_of(c, [](const RingExpr& e) { return e.kind == ExprKind::rg; });
    };
    checks.push_back({"C21", "R gnc, p nilpotent in R, G a p-group implies RG gnc", [group_rings](Trial& t, const Catalog& c) {
                          for (const auto& expr : group_rings(c)) {
                              const std::string base = detail::base_of(parse_ring_expr(expr));
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(R) & group_is_p_group_with_nil_p => gnc(RG)",
                                          {{base, "gnc"}, {expr, "group_is_p_group_with_nil_p"}, {expr, "gnc"}},
                                          [](const Bits& b) { return implies(b[0] && b[1], b[2]); });
                              });
                          }
                      }});
    checks.push_back({"C22", "RG gnc implies R gnc", [group_rings](Trial& t, const Catalog& c) {
                          for (const auto& expr : group_rings(c)) {
                              const std::string base = detail::base_of(parse_ring_expr(expr));
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(RG) => gnc(R)", {{expr, "gnc"}, {base, "gnc"}},
                                          [](const Bits& b) { return implies(b[0], b[1]); });
                              });
                          }
                      }});
    checks.push_back({"C23", "Z_3 C_2: idempotents {0,1,2+g,2+2g}, Nil = {0}, 1+g a non-unit that is not nil-clean",
                      [](Trial& t, const Catalog&) {
                          const std::string expr = "RG(Zn(3),C(2))";
                          t.on(expr, [&] {
                              t.claim(expr, "fixture sets and refutation of 1+g",
                                      {{expr, "z3c2_idempotents_exact"},
                                       {expr, "z3c2_nilpotents_exact"},
                                       {expr, "z3c2_one_plus_g_nonunit"},
                                       {expr, "z3c2_one_plus_g_refuted"},
                                       {expr, "gnc"}},
                                      [](const Bits& b) { return b[0] && b[1] && b[2] && b[3] && !b[4]; });
                          });
                      }});
    checks.push_back({"C24", "abelian G, RG gnc implies G is a p-group with p nilpotent in R",
                      [group_rings](Trial& t, const Catalog& c) {
                          for (const auto& expr : group_rings(c))
                              t.on(expr, [&] {
                                  t.claim(expr, "gnc(RG) => group_is_p_group_with_nil_p",
                                          {{expr, "gnc"}, {expr, "group_is_p_group_with_nil_p"}},
                                          [](const Bits& b) { return implies(b[0], b[1]); });
                              });
                      }});
    checks.push_back({"C25", "RG modulo the augmentation ideal has the tables of R", [group_rings](Trial& t, const Catalog& c) {
                          for (const auto& expr : group_rings(c))
                              t.on(expr, [&] {
                                  t.claim(expr, "RG/D tables equal R tables",
                                          {{expr, "augmentation_quotient_matches_base"}},
                                          [](const Bits& b) { return b[0]; });
                              });
                      }});
    return checks;
}

inline CheckResult run_check(const Check& check, const std::vector<RingExpr>& catalog, RingContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    Trial t(ctx);
    check.run(t, catalog);
    CheckResult r = std::move(t).finish(check.id, check.anchor);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct SuiteSummary {
    std::uint64_t pass = 0, fail = 0, skipped = 0;
};

struct SuiteReport {
    std::vector<CheckResult> results;
    SuiteSummary summary;
};

inline std::vector<RingExpr> parse_catalog(const std::vector<std::string>& catalog) {
    std::vector<RingExpr> out;
    for (const auto& s : catalog) out.push_back(parse_ring_expr(s));
    return out;
}

/// Runs the selected checks (all when `only` is empty) in check order.
inline SuiteReport run_all(const std::vector<std::string>& catalog, RingContext& ctx,
                           const std::vector<Check>& checks = default_checks(),
                           const std::vector<std::string>& only = {}) {
    const auto exprs = parse_catalog(catalog);
    std::vector<const Check*> selected;
    for (const auto& c : checks)
        if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) selected.push_back(&c);
    for (const auto& id : only)
        if (std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; }))
            throw input_error("unknown check id '" + id + "'");

    SuiteReport rep;
    rep.results.resize(selected.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(ctx.options().jobs, unsigned(selected.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++)
            rep.results[i] = run_check(*selected[i], exprs, ctx);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : rep.results) {
        if (r.status == CheckStatus::pass) ++rep.summary.pass;
        else if (r.status == CheckStatus::fail) ++rep.summary.fail;
        else ++rep.summary.skipped;
    }
    return rep;
}

/// Recomputes every fact in the certificate; true when all recorded values reproduce.
inline bool replay(const CheckCertificate& cert, const HarnessOptions& opt = {},
                   const NamedRings& named = default_named_rings()) {
    RingContext fresh(opt, named);
    for (const auto& f : cert.facts)
        if (evaluate_fact(fresh.ring(f.ring), f.fact).value != f.value) return false;
    return true;
}

} // namespace gncring
