#pragma once

/**
 * @file finite_ring.hpp
 * @brief Finite unital rings over a dense carrier 0..size-1, with element classification.
 *
 * A FiniteRing is an immutable handle. Every construction in this library encodes its
 * structured elements (tuples, matrices, group-ring coefficient vectors) as indices and
 * hands over evaluators for addition and multiplication. Small rings get their operation
 * tables materialized up front; larger ones keep the structural evaluators and compute
 * products on demand.
 *
 * The classification caches (units, idempotents, nilpotents, Jacobson radical, center)
 * are filled once on first use and are read-only afterwards, so a ring may be shared
 * between threads.
 */

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gncring/errors.hpp"
#include "gncring/index_set.hpp"

namespace gncring {

using BinaryOp = std::function<Index(Index, Index)>;
using UnaryOp = std::function<Index(Index)>;
using Formatter = std::function<std::string(Index)>;

inline constexpr Index no_index = static_cast<Index>(-1);

/// Rings at or below this size get materialized operation tables.
inline constexpr std::uint64_t default_materialize_limit = 4096;

struct ElementSets {
    IndexSet units;
    IndexSet idempotents;
    IndexSet nilpotents;
    IndexSet jacobson;
    IndexSet center;
};

struct ElementProfile {
    Index element = 0;
    bool is_unit = false;
    std::optional<Index> inverse;
    bool is_idempotent = false;
    std::optional<std::uint64_t> nilpotency_index;
    bool in_jacobson = false;
    bool is_central = false;
};

class FiniteRing {
public:
    struct Definition {
        std::string label;
        Index size = 1;
        Index zero = 0;
        Index one = 0;
        BinaryOp add;
        BinaryOp mul;
        UnaryOp neg;                            // derived from add when empty
        Formatter format;                       // decimal index when empty
        std::vector<Index> additive_generators; // computed on demand when empty
        std::any structure;                     // construction metadata (see structure<T>())
    };

    FiniteRing() : FiniteRing(zero_ring_definition()) {}

    explicit FiniteRing(Definition def, std::uint64_t materialize_limit = default_materialize_limit) {
        if (def.size == 0) throw input_error("ring carrier must be non-empty");
        if (def.zero >= def.size || def.one >= def.size)
            throw input_error("distinguished element out of range in " + def.label);
        if (!def.add || !def.mul) throw input_error("ring " + def.label + " lacks an operation");

        auto impl = std::make_shared<Impl>();
        impl->label = std::move(def.label);
        impl->size = def.size;
        impl->zero = def.zero;
        impl->one = def.one;
        impl->format = std::move(def.format);
        impl->generators_hint = std::move(def.additive_generators);
        impl->structure = std::move(def.structure);

        const std::size_t n = def.size;
        if (n <= materialize_limit) {
            impl->add_table.resize(n * n);
            impl->mul_table.resize(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    impl->add_table[a * n + b] = def.add(Index(a), Index(b));
                    impl->mul_table[a * n + b] = def.mul(Index(a), Index(b));
                }
        } else {
            impl->add_fn = std::move(def.add);
            impl->mul_fn = std::move(def.mul);
        }
        build_negation(*impl, def.neg);
        impl_ = std::move(impl);
    }

    /// Ring given by explicit Cayley tables (row-major, size*size entries). Negation is derived.
    static FiniteRing from_tables(std::string label, Index size, Index zero, Index one,
                                  std::vector<Index> add, std::vector<Index> mul) {
        const std::size_t n = size;
        if (size == 0) throw input_error("ring carrier must be non-empty");
        if (add.size() != n * n || mul.size() != n * n)
            throw input_error("Cayley tables must have size*size entries");
        for (std::size_t i = 0; i < n * n; ++i)
            if (add[i] >= size || mul[i] >= size)
                throw input_error("Cayley table entry out of range");
        if (zero >= size || one >= size) throw input_error("distinguished element out of range");

        FiniteRing r(no_init{});
        auto impl = std::make_shared<Impl>();
        impl->label = std::move(label);
        impl->size = size;
        impl->zero = zero;
        impl->one = one;
        impl->add_table = std::move(add);
        impl->mul_table = std::move(mul);
        build_negation(*impl, {});
        r.impl_ = std::move(impl);
        return r;
    }

    Index size() const noexcept { return impl_->size; }
    Index zero() const noexcept { return impl_->zero; }
    Index one() const noexcept { return impl_->one; }
    const std::string& label() const noexcept { return impl_->label; }
    bool materialized() const noexcept { return !impl_->mul_table.empty(); }

    Index add(Index a, Index b) const {
        if (!impl_->add_table.empty()) return impl_->add_table[std::size_t(a) * impl_->size + b];
        return impl_->add_fn(a, b);
    }
    Index mul(Index a, Index b) const {
        if (!impl_->mul_table.empty()) return impl_->mul_table[std::size_t(a) * impl_->size + b];
        return impl_->mul_fn(a, b);
    }
    /// no_index when the additive structure has no inverse for a (only in invalid rings).
    Index neg(Index a) const { return impl_->neg_table[a]; }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }

    std::string format(Index x) const {
        if (impl_->format) return impl_->format(x);
        return std::to_string(x);
    }

    void check_index(Index x) const {
        if (x >= impl_->size)
            throw input_error("element index " + std::to_string(x) + " out of range for " + label() +
                              " (size " + std::to_string(size()) + ")");
    }

    /// Construction metadata, e.g. the base ring and group behind a group ring.
    template <class T>
    const T* structure() const {
        return std::any_cast<T>(&impl_->structure);
    }

    /// A generating set of the additive group (greedy, least-index first) unless the construction supplied one.
    const std::vector<Index>& additive_generators() const {
        std::call_once(impl_->generators_once, [this] {
            if (!impl_->generators_hint.empty()) {
                impl_->generators = impl_->generators_hint;
                return;
            }
            impl_->generators = greedy_generators();
        });
        return impl_->generators;
    }

    /// Cached classification of all elements.
    const ElementSets& sets() const {
        std::call_once(impl_->sets_once, [this] { compute_sets(); });
        return impl_->sets;
    }

    /// Inverse of a unit, from the cached scan.
    std::optional<Index> cached_inverse(Index x) const {
        sets();
        Index y = impl_->inverse[x];
        if (y == no_index) return std::nullopt;
        return y;
    }

    /// Same carrier size, distinguished elements and operation tables.
    bool same_tables(const FiniteRing& other) const {
        if (size() != other.size() || zero() != other.zero() || one() != other.one()) return false;
        for (Index a = 0; a < size(); ++a)
            for (Index b = 0; b < size(); ++b)
                if (add(a, b) != other.add(a, b) || mul(a, b) != other.mul(a, b)) return false;
        return true;
    }

    /// x^k by repeated squaring, x^0 = one.
    Index power(Index x, std::uint64_t k) const {
        Index result = one();
        Index base = x;
        while (k > 0) {
            if (k & 1u) result = mul(result, base);
            k >>= 1;
            if (k) base = mul(base, base);
        }
        return result;
    }

    /// n*x for a non-negative integer n (double-and-add).
    Index times(std::uint64_t n, Index x) const {
        Index result = zero();
        Index base = x;
        while (n > 0) {
            if (n & 1u) result = add(result, base);
            n >>= 1;
            if (n) base = add(base, base);
        }
        return result;
    }

private:
    struct no_init {};
    explicit FiniteRing(no_init) {}

    struct Impl {
        std::string label;
        Index size = 1;
        Index zero = 0;
        Index one = 0;
        std::vector<Index> add_table;
        std::vector<Index> mul_table;
        std::vector<Index> neg_table;
        BinaryOp add_fn;
        BinaryOp mul_fn;
        Formatter format;
        std::vector<Index> generators_hint;
        std::any structure;

        mutable std::once_flag sets_once;
        mutable ElementSets sets;
        mutable std::vector<Index> inverse;
        mutable std::once_flag generators_once;
        mutable std::vector<Index> generators;
    };

    static Definition zero_ring_definition() {
        Definition d;
        d.label = "Zn(1)";
        d.add = [](Index, Index) { return Index(0); };
        d.mul = [](Index, Index) { return Index(0); };
        return d;
    }

    static void build_negation(Impl& impl, const UnaryOp& neg) {
        const Index n = impl.size;
        impl.neg_table.assign(n, no_index);
        if (neg) {
            for (Index a = 0; a < n; ++a) impl.neg_table[a] = neg(a);
            return;
        }
        auto add = [&](Index a, Index b) {
            return impl.add_table.empty() ? impl.add_fn(a, b) : impl.add_table[std::size_t(a) * n + b];
        };
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (add(a, b) == impl.zero) {
                    impl.neg_table[a] = b;
                    break;
                }
    }

    std::vector<Index> greedy_generators() const {
        const Index n = size();
        std::vector<bool> in_span(n, false);
        std::vector<Index> span{zero()};
        in_span[zero()] = true;
        std::vector<Index> gens;
        for (Index candidate = 0; candidate < n && span.size() < n; ++candidate) {
            if (in_span[candidate]) continue;
            gens.push_back(candidate);
            // closure of the current span under adding every generator on the right
            for (std::size_t i = 0; i < span.size(); ++i)
                for (Index g : gens) {
                    Index s = add(span[i], g);
                    if (s < n && !in_span[s]) {
                        in_span[s] = true;
                        span.push_back(s);
                    }
                }
        }
        return gens;
    }

    void compute_sets() const {
        const Index n = size();
        auto& impl = *impl_;
        std::vector<bool> idem(n), nil(n), unit(n), jac(n), center(n);
        impl.inverse.assign(n, no_index);

        for (Index x = 0; x < n; ++x) {
            idem[x] = mul(x, x) == x;
            nil[x] = power(x, n) == zero();
        }
        for (Index x = 0; x < n; ++x) {
            if (impl.inverse[x] != no_index) continue;
            if (nil[x] && n > 1) continue;
            for (Index y = 0; y < n; ++y) {
                if (mul(x, y) == one() && mul(y, x) == one()) {
                    impl.inverse[x] = y;
                    impl.inverse[y] = x;
                    break;
                }
            }
        }
        for (Index x = 0; x < n; ++x) unit[x] = impl.inverse[x] != no_index;

        // x in J iff one - y*x is a unit for every y; units never qualify in a nonzero ring
        for (Index x = 0; x < n; ++x) {
            if (unit[x] && n > 1) continue;
            bool quasi_regular = true;
            for (Index y = 0; y < n && quasi_regular; ++y)
                quasi_regular = unit[sub(one(), mul(y, x))];
            jac[x] = quasi_regular;
        }
        for (Index x = 0; x < n; ++x) {
            bool central = true;
            for (Index y = 0; y < n && central; ++y) central = mul(x, y) == mul(y, x);
            center[x] = central;
        }
        impl.sets.units = IndexSet::from_mask(std::move(unit));
        impl.sets.idempotents = IndexSet::from_mask(std::move(idem));
        impl.sets.nilpotents = IndexSet::from_mask(std::move(nil));
        impl.sets.jacobson = IndexSet::from_mask(std::move(jac));
        impl.sets.center = IndexSet::from_mask(std::move(center));
    }

    std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------
// element-level operations

/// x^k with x^0 = one.
inline Index pow(const FiniteRing& ring, Index x, std::uint64_t k) {
    ring.check_index(x);
    return ring.power(x, k);
}

/// Two-sided inverse of x by a scan of the carrier, or nullopt.
inline std::optional<Index> unit_check(const FiniteRing& ring, Index x) {
    ring.check_index(x);
    for (Index y = 0; y < ring.size(); ++y)
        if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) return y;
    return std::nullopt;
}

/// Least t >= 1 with x^t = 0, or nullopt when x is not nilpotent.
inline std::optional<std::uint64_t> nilpotency_index(const FiniteRing& ring, Index x) {
    ring.check_index(x);
    if (ring.power(x, ring.size()) != ring.zero()) return std::nullopt;
    Index p = x;
    for (std::uint64_t t = 1;; ++t) {
        if (p == ring.zero()) return t;
        p = ring.mul(p, x);
    }
}

inline const ElementSets& element_sets(const FiniteRing& ring) { return ring.sets(); }

inline ElementProfile profile(const FiniteRing& ring, Index x) {
    ring.check_index(x);
    const auto& s = ring.sets();
    ElementProfile p;
    p.element = x;
    p.is_unit = s.units.contains(x);
    if (p.is_unit) p.inverse = ring.cached_inverse(x);
    p.is_idempotent = s.idempotents.contains(x);
    if (s.nilpotents.contains(x)) p.nilpotency_index = nilpotency_index(ring, x);
    p.in_jacobson = s.jacobson.contains(x);
    p.is_central = s.center.contains(x);
    return p;
}

} // namespace gncring
