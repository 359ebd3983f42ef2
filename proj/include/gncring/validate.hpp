#pragma once

/**
 * @file validate.hpp
 * @brief Ring-axiom checking for FiniteRing values.
 *
 * Three strategies:
 *
 *  - exhaustive: every triple of the carrier, for rings up to the validation bound.
 *  - reduced: a complete check that quantifies one argument over a generating set of
 *    the additive group instead of the whole carrier. Additive associativity uses
 *    Light's test (the elements a with (x+a)+z = x+(a+z) for all x, z are closed under
 *    +, so generators suffice). Biadditivity of the product follows from
 *    (b+g)c = bc+gc for all b, c and every generator g, plus a(b+g) = ab+ag for generator
 *    a only. Once the product is biadditive the associator is triadditive and vanishes
 *    iff it vanishes on generator triples. Cost is O(n^2 k) instead of O(n^3).
 *  - sampled: a deterministic pseudorandom sample of triples when even the reduced
 *    check exceeds its work budget.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gncring/finite_ring.hpp"

namespace gncring {

enum class ValidationMode { exhaustive, reduced, sampled };

inline const char* to_string(ValidationMode m) {
    switch (m) {
    case ValidationMode::exhaustive: return "exhaustive";
    case ValidationMode::reduced: return "reduced";
    case ValidationMode::sampled: return "sampled";
    }
    return "?";
}

struct ValidationOptions {
    std::uint64_t bound = 512;                   // exhaustive triple check up to this size
    bool allow_reduced = true;                   // complete generator-reduced check above the bound
    std::uint64_t reduced_budget = 1ull << 31;   // n^2 * (k+1) evaluations
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;  // sampled mode
    std::uint64_t samples_per_element = 10;
};

struct ValidationReport {
    bool valid = true;
    ValidationMode mode = ValidationMode::exhaustive;
    std::string axiom;            // first violated axiom
    std::vector<Index> witness;   // elements witnessing the violation
    std::uint64_t checks = 0;

    bool exhaustive() const { return mode != ValidationMode::sampled; }
};

namespace detail {

inline constexpr std::uint64_t temporary_table_bytes = std::uint64_t(128) << 20;

class AxiomChecker {
public:
    explicit AxiomChecker(const FiniteRing& r) : r_(r), n_(r.size()) {}

    ValidationReport& report() { return rep_; }

    bool fail(std::string axiom, std::vector<Index> witness) {
        rep_.valid = false;
        rep_.axiom = std::move(axiom);
        rep_.witness = std::move(witness);
        return false;
    }

    // O(n) and O(n^2) axioms shared by every strategy.
    bool basic() {
        const Index z = r_.zero(), o = r_.one();
        if (z == o && n_ > 1) return fail("zero equals one in a nonzero ring", {z});
        for (Index x = 0; x < n_; ++x) {
            ++rep_.checks;
            if (r_.add(z, x) != x || r_.add(x, z) != x) return fail("additive identity", {x});
            Index nx = r_.neg(x);
            if (nx == no_index || nx >= n_ || r_.add(x, nx) != z) return fail("additive inverse", {x});
            if (r_.mul(o, x) != x || r_.mul(x, o) != x) return fail("multiplicative identity", {o, x});
        }
        return true;
    }

    bool commutativity() {
        for (Index a = 0; a < n_; ++a)
            for (Index b = a; b < n_; ++b) {
                ++rep_.checks;
                Index s = r_.add(a, b);
                if (s >= n_) return fail("closure of addition", {a, b});
                if (s != r_.add(b, a)) return fail("additive commutativity", {a, b});
            }
        return true;
    }

    bool triple(Index a, Index b, Index c) {
        ++rep_.checks;
        if (r_.add(r_.add(a, b), c) != r_.add(a, r_.add(b, c))) return fail("additive associativity", {a, b, c});
        if (r_.mul(r_.mul(a, b), c) != r_.mul(a, r_.mul(b, c)))
            return fail("multiplicative associativity", {a, b, c});
        if (r_.mul(a, r_.add(b, c)) != r_.add(r_.mul(a, b), r_.mul(a, c)))
            return fail("left distributivity", {a, b, c});
        if (r_.mul(r_.add(a, b), c) != r_.add(r_.mul(a, c), r_.mul(b, c)))
            return fail("right distributivity", {a, b, c});
        return true;
    }

    bool exhaustive() {
        if (!basic() || !commutativity()) return false;
        for (Index a = 0; a < n_; ++a)
            for (Index b = 0; b < n_; ++b) {
                const Index ab = r_.mul(a, b), s = r_.add(a, b);
                if (ab >= n_) return fail("closure of multiplication", {a, b});
                for (Index c = 0; c < n_; ++c) {
                    ++rep_.checks;
                    const Index ac = r_.mul(a, c), bc = r_.mul(b, c);
                    if (r_.add(s, c) != r_.add(a, r_.add(b, c))) return fail("additive associativity", {a, b, c});
                    if (r_.mul(ab, c) != r_.mul(a, bc)) return fail("multiplicative associativity", {a, b, c});
                    if (r_.mul(a, r_.add(b, c)) != r_.add(ab, ac)) return fail("left distributivity", {a, b, c});
                    if (r_.mul(s, c) != r_.add(ac, bc)) return fail("right distributivity", {a, b, c});
                }
            }
        return true;
    }

    bool reduced(const std::vector<Index>& gens) {
        if (!basic()) return false;
        // lazy rings get a temporary addition table; every later sum is a lookup
        std::vector<std::uint16_t> table;
        if (!r_.materialized() && std::uint64_t(n_) * n_ * sizeof(std::uint16_t) <= temporary_table_bytes) {
            table.resize(std::size_t(n_) * n_);
            for (Index a = 0; a < n_; ++a)
                for (Index b = 0; b < n_; ++b) {
                    Index s = r_.add(a, b);
                    if (s >= n_) return fail("closure of addition", {a, b});
                    table[std::size_t(a) * n_ + b] = std::uint16_t(s);
                }
        }
        auto add = [&](Index a, Index b) -> Index {
            return table.empty() ? r_.add(a, b) : table[std::size_t(a) * n_ + b];
        };
        for (Index a = 0; a < n_; ++a)
            for (Index b = a; b < n_; ++b) {
                ++rep_.checks;
                Index s = add(a, b);
                if (s >= n_) return fail("closure of addition", {a, b});
                if (s != add(b, a)) return fail("additive commutativity", {a, b});
            }
        if (!spans(gens)) return fail("additive generators do not span the carrier", gens);
        // Light's associativity test with middle argument over the generators
        for (Index g : gens)
            for (Index x = 0; x < n_; ++x) {
                Index xg = add(x, g);
                for (Index z = 0; z < n_; ++z) {
                    ++rep_.checks;
                    if (add(xg, z) != add(x, add(g, z))) return fail("additive associativity", {x, g, z});
                }
            }
        // right multiplication by c is additive: (b+g)c = bc + gc, one column of products per c
        std::vector<Index> column(n_);
        for (Index c = 0; c < n_; ++c) {
            for (Index b = 0; b < n_; ++b) {
                column[b] = r_.mul(b, c);
                if (column[b] >= n_) return fail("closure of multiplication", {b, c});
            }
            for (Index b = 0; b < n_; ++b)
                for (Index g : gens) {
                    ++rep_.checks;
                    if (column[add(b, g)] != add(column[b], column[g])) return fail("right distributivity", {b, g, c});
                }
        }
        // left multiplication by a generator is additive: a(b+g) = ab + ag
        std::vector<Index> row(n_);
        for (Index a : gens) {
            for (Index b = 0; b < n_; ++b) row[b] = r_.mul(a, b);
            for (Index b = 0; b < n_; ++b)
                for (Index g : gens) {
                    ++rep_.checks;
                    if (row[add(b, g)] != add(row[b], row[g])) return fail("left distributivity", {a, b, g});
                }
        }
        for (Index a : gens)
            for (Index b : gens)
                for (Index c : gens) {
                    ++rep_.checks;
                    if (r_.mul(r_.mul(a, b), c) != r_.mul(a, r_.mul(b, c)))
                        return fail("multiplicative associativity", {a, b, c});
                }
        return true;
    }

    bool sampled(const ValidationOptions& opt) {
        if (!basic()) return false;
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<Index> pick(0, n_ - 1);
        const std::uint64_t count = opt.samples_per_element * n_;
        for (std::uint64_t i = 0; i < count; ++i) {
            Index a = pick(rng), b = pick(rng), c = pick(rng);
            if (r_.add(a, b) >= n_ || r_.mul(a, b) >= n_) return fail("closure", {a, b});
            if (r_.add(a, b) != r_.add(b, a)) return fail("additive commutativity", {a, b});
            if (!triple(a, b, c)) return false;
        }
        return true;
    }

private:
    bool spans(const std::vector<Index>& gens) {
        std::vector<bool> seen(n_, false);
        std::vector<Index> reached{r_.zero()};
        seen[r_.zero()] = true;
        for (std::size_t i = 0; i < reached.size(); ++i)
            for (Index g : gens) {
                Index s = r_.add(reached[i], g);
                if (s < n_ && !seen[s]) {
                    seen[s] = true;
                    reached.push_back(s);
                }
            }
        return reached.size() == n_;
    }

    const FiniteRing& r_;
    const Index n_;
    ValidationReport rep_;
};

} // namespace detail

inline ValidationReport validate(const FiniteRing& ring, const ValidationOptions& opt = {}) {
    detail::AxiomChecker checker(ring);
    const std::uint64_t n = ring.size();
    if (n <= opt.bound) {
        checker.report().mode = ValidationMode::exhaustive;
        checker.exhaustive();
        return checker.report();
    }
    if (opt.allow_reduced) {
        const auto& gens = ring.additive_generators();
        if (n * n * (gens.size() + 1) <= opt.reduced_budget) {
            checker.report().mode = ValidationMode::reduced;
            checker.reduced(gens);
            return checker.report();
        }
    }
    checker.report().mode = ValidationMode::sampled;
    checker.sampled(opt);
    return checker.report();
}

/// Reduced check regardless of size; used to cross-check the two complete strategies.
inline ValidationReport validate_reduced(const FiniteRing& ring) {
    detail::AxiomChecker checker(ring);
    checker.report().mode = ValidationMode::reduced;
    checker.reduced(ring.additive_generators());
    return checker.report();
}

} // namespace gncring
