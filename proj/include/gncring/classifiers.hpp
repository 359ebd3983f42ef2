#pragma once

/**
 * @file classifiers.hpp
 * @brief Element decompositions (clean, nil-clean, strongly nil-clean) and ring-level predicates.
 *
 * Every verdict is decided by an exhaustive definitional scan over the carrier. Scans visit
 * elements and idempotents in ascending index order, so witnesses and refutations are
 * deterministic: the least failing element, then the least idempotent.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gncring/constructions.hpp"
#include "gncring/errors.hpp"
#include "gncring/finite_ring.hpp"

namespace gncring {

// ---------------------------------------------------------------------------
// decompositions

enum class DecompositionKind { clean, nil_clean, strongly_nil_clean };

inline const char* to_string(DecompositionKind k) {
    switch (k) {
    case DecompositionKind::clean: return "clean";
    case DecompositionKind::nil_clean: return "nil_clean";
    case DecompositionKind::strongly_nil_clean: return "strongly_nil_clean";
    }
    return "?";
}

inline DecompositionKind parse_decomposition_kind(const std::string& s) {
    if (s == "clean") return DecompositionKind::clean;
    if (s == "nil_clean") return DecompositionKind::nil_clean;
    if (s == "strongly_nil_clean") return DecompositionKind::strongly_nil_clean;
    throw input_error("unknown decomposition kind '" + s + "' (expected clean, nil_clean or strongly_nil_clean)");
}

/// element = idempotent_part + other_part; other_part is a unit for clean, nilpotent otherwise.
struct Decomposition {
    Index element = 0;
    DecompositionKind kind = DecompositionKind::nil_clean;
    Index idempotent_part = 0;
    Index other_part = 0;
    bool commuting = false;
};

enum class RefutationReason { not_unit, not_nilpotent, not_commuting };

inline const char* to_string(RefutationReason r) {
    switch (r) {
    case RefutationReason::not_unit: return "not_unit";
    case RefutationReason::not_nilpotent: return "not_nilpotent";
    case RefutationReason::not_commuting: return "not_commuting";
    }
    return "?";
}

/// One row per idempotent e: why element - e fails.
struct RefutationRow {
    Index idempotent = 0;
    Index difference = 0;
    RefutationReason reason = RefutationReason::not_nilpotent;
};

struct Refutation {
    Index element = 0;
    DecompositionKind kind = DecompositionKind::nil_clean;
    std::vector<RefutationRow> rows;
};

using DecompositionResult = std::variant<Decomposition, Refutation>;

namespace detail {

/// Reason x - e fails for this kind, or nullopt when it succeeds.
inline std::optional<RefutationReason> decomposition_failure(const FiniteRing& ring, DecompositionKind kind, Index e,
                                                             Index d) {
    const auto& s = ring.sets();
    switch (kind) {
    case DecompositionKind::clean:
        if (!s.units.contains(d)) return RefutationReason::not_unit;
        return std::nullopt;
    case DecompositionKind::nil_clean:
        if (!s.nilpotents.contains(d)) return RefutationReason::not_nilpotent;
        return std::nullopt;
    case DecompositionKind::strongly_nil_clean:
        if (!s.nilpotents.contains(d)) return RefutationReason::not_nilpotent;
        if (ring.mul(e, d) != ring.mul(d, e)) return RefutationReason::not_commuting;
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace detail

/// First decomposition of x over ascending idempotents, without assembling a refutation.
inline std::optional<Decomposition> find_decomposition(const FiniteRing& ring, Index x, DecompositionKind kind) {
    ring.check_index(x);
    for (Index e : ring.sets().idempotents) {
        Index d = ring.sub(x, e);
        if (!detail::decomposition_failure(ring, kind, e, d))
            return Decomposition{x, kind, e, d, ring.mul(e, d) == ring.mul(d, e)};
    }
    return std::nullopt;
}

inline DecompositionResult decompose(const FiniteRing& ring, Index x, DecompositionKind kind) {
    if (auto d = find_decomposition(ring, x, kind)) return *d;
    Refutation r{x, kind, {}};
    for (Index e : ring.sets().idempotents) {
        Index d = ring.sub(x, e);
        r.rows.push_back({e, d, *detail::decomposition_failure(ring, kind, e, d)});
    }
    return r;
}

inline DecompositionResult decompose(const FiniteRing& ring, Index x, const std::string& kind) {
    return decompose(ring, x, parse_decomposition_kind(kind));
}

/// All elements admitting a nil-clean decomposition.
inline IndexSet nil_clean_set(const FiniteRing& ring) {
    std::vector<bool> mask(ring.size(), false);
    const auto& s = ring.sets();
    for (Index e : s.idempotents)
        for (Index q : s.nilpotents) mask[ring.add(e, q)] = true;
    return IndexSet::from_mask(std::move(mask));
}

// ---------------------------------------------------------------------------
// certificates and verdicts

enum class CertificateKind { witness_element, failing_element, subset_listing };

inline const char* to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::witness_element: return "witness_element";
    case CertificateKind::failing_element: return "failing_element";
    case CertificateKind::subset_listing: return "subset_listing";
    }
    return "?";
}

struct Certificate {
    CertificateKind kind = CertificateKind::failing_element;
    std::vector<Index> elements;
    std::optional<Refutation> refutation; // covers every idempotent when present
    std::string note;
};

struct Verdict {
    bool holds = true;
    std::optional<Certificate> certificate;

    explicit operator bool() const { return holds; }
};

enum class Property {
    gnc,
    nil_clean,
    clean,
    strongly_nil_clean,
    uu,
    nr,
    ni,
    local,
    abelian,
    boolean,
    reduced,
    division,
    field,
    two_primal_finite,
};

inline constexpr std::array<Property, 14> all_properties{
    Property::gnc,     Property::nil_clean, Property::clean,   Property::strongly_nil_clean, Property::uu,
    Property::nr,      Property::ni,        Property::local,   Property::abelian,            Property::boolean,
    Property::reduced, Property::division,  Property::field,   Property::two_primal_finite,
};

inline const char* to_string(Property p) {
    switch (p) {
    case Property::gnc: return "gnc";
    case Property::nil_clean: return "nil_clean";
    case Property::clean: return "clean";
    case Property::strongly_nil_clean: return "strongly_nil_clean";
    case Property::uu: return "uu";
    case Property::nr: return "nr";
    case Property::ni: return "ni";
    case Property::local: return "local";
    case Property::abelian: return "abelian";
    case Property::boolean: return "boolean";
    case Property::reduced: return "reduced";
    case Property::division: return "division";
    case Property::field: return "field";
    case Property::two_primal_finite: return "two_primal_finite";
    }
    return "?";
}

inline Property parse_property(const std::string& s) {
    for (Property p : all_properties)
        if (s == to_string(p)) return p;
    throw input_error("unknown property '" + s + "'");
}

namespace detail {

inline Verdict holds() { return Verdict{true, std::nullopt}; }

inline Verdict fails(std::vector<Index> elements, std::string note,
                     CertificateKind kind = CertificateKind::failing_element) {
    return Verdict{false, Certificate{kind, std::move(elements), std::nullopt, std::move(note)}};
}

/// Every element of `candidates` decomposes with this kind.
template <class Range>
Verdict all_decompose(const FiniteRing& ring, const Range& candidates, DecompositionKind kind) {
    for (Index x : candidates) {
        if (find_decomposition(ring, x, kind)) continue;
        auto refutation = std::get<Refutation>(decompose(ring, x, kind));
        Verdict v = fails({x}, std::string("no ") + to_string(kind) + " decomposition");
        v.certificate->refutation = std::move(refutation);
        return v;
    }
    return holds();
}

inline std::vector<Index> non_units(const FiniteRing& ring) {
    std::vector<Index> out;
    const auto& u = ring.sets().units;
    for (Index x = 0; x < ring.size(); ++x)
        if (!u.contains(x)) out.push_back(x);
    return out;
}

inline std::vector<Index> carrier(const FiniteRing& ring) {
    std::vector<Index> out(ring.size());
    for (Index x = 0; x < ring.size(); ++x) out[x] = x;
    return out;
}

} // namespace detail

/// Every non-unit is nil-clean.
inline Verdict is_gnc(const FiniteRing& ring) {
    return detail::all_decompose(ring, detail::non_units(ring), DecompositionKind::nil_clean);
}

/// J(R) consists of nilpotents.
inline Verdict jacobson_is_nil(const FiniteRing& ring) {
    const auto& s = ring.sets();
    for (Index j : s.jacobson)
        if (!s.nilpotents.contains(j)) return detail::fails({j}, "radical element that is not nilpotent");
    return detail::holds();
}

inline Verdict ring_predicate(const FiniteRing& ring, Property p) {
    using detail::fails;
    using detail::holds;
    const auto& s = ring.sets();
    const Index n = ring.size();
    switch (p) {
    case Property::gnc: return is_gnc(ring);
    case Property::nil_clean:
        return detail::all_decompose(ring, detail::carrier(ring), DecompositionKind::nil_clean);
    case Property::clean: return detail::all_decompose(ring, detail::carrier(ring), DecompositionKind::clean);
    case Property::strongly_nil_clean:
        return detail::all_decompose(ring, detail::carrier(ring), DecompositionKind::strongly_nil_clean);
    case Property::uu: {
        // U(R) = 1 + Nil(R)
        for (Index u : s.units)
            if (!s.nilpotents.contains(ring.sub(u, ring.one()))) return fails({u}, "unit u with u-1 not nilpotent");
        for (Index q : s.nilpotents)
            if (!s.units.contains(ring.add(ring.one(), q))) return fails({q}, "nilpotent q with 1+q not a unit");
        return holds();
    }
    case Property::nr:
    case Property::ni: {
        for (Index a : s.nilpotents)
            for (Index b : s.nilpotents) {
                if (!s.nilpotents.contains(ring.sub(a, b))) return fails({a, b}, "a-b not nilpotent");
                if (!s.nilpotents.contains(ring.mul(a, b))) return fails({a, b}, "ab not nilpotent");
            }
        if (p == Property::ni)
            for (Index r = 0; r < n; ++r)
                for (Index q : s.nilpotents)
                    if (!s.nilpotents.contains(ring.mul(r, q)) || !s.nilpotents.contains(ring.mul(q, r)))
                        return fails({r, q}, "rq or qr not nilpotent");
        return holds();
    }
    case Property::local: {
        auto nu = detail::non_units(ring);
        for (Index a : nu)
            for (Index b : nu)
                if (s.units.contains(ring.add(a, b))) return fails({a, b}, "non-units with a unit sum");
        return holds();
    }
    case Property::abelian:
        for (Index e : s.idempotents)
            if (!s.center.contains(e))
                for (Index r = 0; r < n; ++r)
                    if (ring.mul(e, r) != ring.mul(r, e)) return fails({e, r}, "idempotent e with er != re");
        return holds();
    case Property::boolean:
        for (Index x = 0; x < n; ++x)
            if (ring.mul(x, x) != x) return fails({x}, "x^2 != x");
        return holds();
    case Property::reduced:
        for (Index q : s.nilpotents)
            if (q != ring.zero()) return fails({q}, "nonzero nilpotent");
        return holds();
    case Property::division:
        if (n == 1) return fails({}, "zero ring");
        for (Index x = 0; x < n; ++x)
            if (x != ring.zero() && !s.units.contains(x)) return fails({x}, "nonzero non-unit");
        return holds();
    case Property::field: {
        Verdict d = ring_predicate(ring, Property::division);
        if (!d.holds) return d;
        for (Index a = 0; a < n; ++a)
            if (!s.center.contains(a))
                for (Index b = 0; b < n; ++b)
                    if (ring.mul(a, b) != ring.mul(b, a)) return fails({a, b}, "ab != ba");
        return holds();
    }
    case Property::two_primal_finite:
        for (Index q : s.nilpotents)
            if (!s.jacobson.contains(q)) return fails({q}, "nilpotent outside J(R)");
        for (Index j : s.jacobson)
            if (!s.nilpotents.contains(j)) return fails({j}, "element of J(R) that is not nilpotent");
        return holds();
    }
    throw input_error("unknown property");
}

inline Verdict ring_predicate(const FiniteRing& ring, const std::string& property) {
    return ring_predicate(ring, parse_property(property));
}

/// Verdicts for a chosen list of properties, keyed by property.
struct RingProfile {
    std::string label;
    std::map<Property, Verdict> verdicts;

    bool has(Property p) const { return verdicts.count(p) != 0; }
    const Verdict& at(Property p) const {
        auto it = verdicts.find(p);
        if (it == verdicts.end()) throw input_error(std::string("property not profiled: ") + to_string(p));
        return it->second;
    }
    bool operator[](Property p) const { return at(p).holds; }
};

inline RingProfile ring_profile(const FiniteRing& ring, const std::vector<Property>& props) {
    RingProfile rp{ring.label(), {}};
    for (Property p : props) rp.verdicts.emplace(p, ring_predicate(ring, p));
    return rp;
}

inline RingProfile ring_profile(const FiniteRing& ring) {
    return ring_profile(ring, std::vector<Property>(all_properties.begin(), all_properties.end()));
}

// ---------------------------------------------------------------------------
// R/J(R) and recognition of M_n(Z_2)

inline Quotient quotient_by_jacobson(const FiniteRing& ring) { return quotient(ring, ring.sets().jacobson, "J"); }

/// R/J(R) is Boolean, decided on the quotient tables.
inline bool quotient_by_jacobson_is_boolean(const FiniteRing& ring) {
    return ring_predicate(quotient_by_jacobson(ring).ring, Property::boolean).holds;
}

/// R/J(R) is Boolean, decided in R: x^2 - x lies in J(R) for every x.
inline bool squares_agree_modulo_jacobson(const FiniteRing& ring) {
    const auto& j = ring.sets().jacobson;
    for (Index x = 0; x < ring.size(); ++x)
        if (!j.contains(ring.sub(ring.mul(x, x), x))) return false;
    return true;
}

/// Matrix units e_ij (row-major) exhibiting ring ≅ M_n(Z_2), when such an isomorphism exists.
struct MatrixUnits {
    Index n = 0;
    std::vector<Index> units;   // e_ij at i*n + j
    std::vector<Index> image;   // index in M(n, Zn(2)) -> index in ring
};

namespace detail {

class MatrixUnitSearch {
public:
    MatrixUnitSearch(const FiniteRing& r, Index n) : r_(r), n_(n), e_(std::size_t(n) * n, no_index) {}

    std::optional<MatrixUnits> run() {
        if (r_.times(2, r_.one()) != r_.zero()) return std::nullopt;
        for (Index e : r_.sets().idempotents)
            if (e != r_.zero()) idempotents_.push_back(e);
        if (!diagonal(0, r_.zero())) return std::nullopt;
        return result_;
    }

private:
    Index& at(Index i, Index j) { return e_[std::size_t(i) * n_ + j]; }

    // e_11..e_nn: nonzero orthogonal idempotents summing to one
    bool diagonal(Index i, Index partial) {
        if (i == n_) return partial == r_.one() && off_diagonal(1);
        for (Index e : idempotents_) {
            bool orthogonal = true;
            for (Index k = 0; k < i && orthogonal; ++k)
                orthogonal = r_.mul(e, at(k, k)) == r_.zero() && r_.mul(at(k, k), e) == r_.zero();
            if (!orthogonal) continue;
            at(i, i) = e;
            if (diagonal(i + 1, r_.add(partial, e))) return true;
        }
        at(i, i) = no_index;
        return false;
    }

    // e_1j in e_11 R e_jj and e_j1 in e_jj R e_11 with e_1j e_j1 = e_11, e_j1 e_1j = e_jj
    bool off_diagonal(Index j) {
        if (j == n_) return complete();
        const Index e11 = at(0, 0), ejj = at(j, j);
        for (Index a = 0; a < r_.size(); ++a) {
            if (a == r_.zero() || r_.mul(r_.mul(e11, a), ejj) != a) continue;
            for (Index b = 0; b < r_.size(); ++b) {
                if (r_.mul(r_.mul(ejj, b), e11) != b) continue;
                if (r_.mul(a, b) != e11 || r_.mul(b, a) != ejj) continue;
                at(0, j) = a;
                at(j, 0) = b;
                if (off_diagonal(j + 1)) return true;
            }
        }
        return false;
    }

    bool complete() {
        for (Index i = 1; i < n_; ++i)
            for (Index j = 1; j < n_; ++j)
                if (i != j) at(i, j) = r_.mul(at(i, 0), at(0, j));
        // relations e_ij e_kl = [j = k] e_il
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j)
                for (Index k = 0; k < n_; ++k)
                    for (Index l = 0; l < n_; ++l)
                        if (r_.mul(at(i, j), at(k, l)) != (j == k ? at(i, l) : r_.zero())) return false;
        // linear map from M_n(Z_2), verified as a table isomorphism
        FiniteRing target = build_matrix(build_zn(2), n_, MatrixShape::full);
        if (target.size() != r_.size()) return false;
        std::vector<Index> image(target.size());
        const Index nn = n_ * n_;
        for (Index m = 0; m < target.size(); ++m) {
            Index x = r_.zero();
            for (Index p = 0; p < nn; ++p)
                if ((m >> (nn - 1 - p)) & 1u) x = r_.add(x, e_[p]);
            image[m] = x;
        }
        if (!tables_equal_under(target, r_, image)) return false;
        result_ = MatrixUnits{n_, e_, std::move(image)};
        return true;
    }

    const FiniteRing& r_;
    Index n_;
    std::vector<Index> e_;
    std::vector<Index> idempotents_;
    std::optional<MatrixUnits> result_;
};

} // namespace detail

/// Isomorphism onto M_n(Z_2) for the n with 2^(n^2) = |ring|, or nullopt.
inline std::optional<MatrixUnits> recognize_matrix_over_z2(const FiniteRing& ring) {
    for (Index n = 1; n * n < 32; ++n) {
        const std::uint64_t target = 1ull << (n * n);
        if (target == ring.size()) return detail::MatrixUnitSearch(ring, n).run();
        if (target > ring.size()) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// semilocal trichotomy

enum class SemilocalBranch { local_nil_J, quotient_is_matrix_over_Z2, nil_clean, none };

inline const char* to_string(SemilocalBranch b) {
    switch (b) {
    case SemilocalBranch::local_nil_J: return "local_nil_J";
    case SemilocalBranch::quotient_is_matrix_over_Z2: return "quotient_is_matrix_over_Z2";
    case SemilocalBranch::nil_clean: return "nil_clean";
    case SemilocalBranch::none: return "none";
    }
    return "?";
}

/// All three branch tests; `branch` is the first that holds in the order
/// local_nil_J, nil_clean, quotient_is_matrix_over_Z2.
struct SemilocalAnalysis {
    SemilocalBranch branch = SemilocalBranch::none;
    bool local_nil_J = false;
    bool nil_clean = false;
    bool quotient_is_matrix_over_Z2 = false;
    Index matrix_size = 0; // n when the quotient is M_n(Z_2)
};

inline SemilocalAnalysis analyze_semilocal(const FiniteRing& ring) {
    SemilocalAnalysis a;
    a.local_nil_J = ring_predicate(ring, Property::local).holds && jacobson_is_nil(ring).holds;
    a.nil_clean = ring_predicate(ring, Property::nil_clean).holds;
    if (jacobson_is_nil(ring).holds) {
        if (auto mu = recognize_matrix_over_z2(quotient_by_jacobson(ring).ring)) {
            a.quotient_is_matrix_over_Z2 = true;
            a.matrix_size = mu->n;
        }
    }
    if (a.local_nil_J) a.branch = SemilocalBranch::local_nil_J;
    else if (a.nil_clean) a.branch = SemilocalBranch::nil_clean;
    else if (a.quotient_is_matrix_over_Z2) a.branch = SemilocalBranch::quotient_is_matrix_over_Z2;
    return a;
}

inline SemilocalBranch semilocal_branch(const FiniteRing& ring) { return analyze_semilocal(ring).branch; }

} // namespace gncring
