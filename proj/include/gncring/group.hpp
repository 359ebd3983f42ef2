#pragma once

/**
 * @file group.hpp
 * @brief Finite groups by Cayley table: cyclic groups, direct products, explicit tables.
 */

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "gncring/errors.hpp"
#include "gncring/index_set.hpp"

namespace gncring {

class FiniteGroup {
public:
    /// Cyclic group C(n); element k is g^k.
    static FiniteGroup cyclic(Index n) {
        if (n == 0) throw input_error("cyclic group order must be at least 1");
        std::vector<Index> table(std::size_t(n) * n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) table[std::size_t(a) * n + b] = (a + b) % n;
        std::vector<std::string> names(n);
        for (Index k = 0; k < n; ++k) names[k] = k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k);
        return FiniteGroup("C(" + std::to_string(n) + ")", n, 0, std::move(table), std::move(names));
    }

    /// Direct product; elements encoded lexicographically with the first factor most significant.
    static FiniteGroup product(const std::vector<FiniteGroup>& factors) {
        if (factors.empty()) throw input_error("group product needs at least one factor");
        if (factors.size() == 1) return factors.front();
        std::uint64_t total = 1;
        for (const auto& f : factors) total *= f.size();
        if (total > (1u << 16)) throw input_error("group product too large");
        const Index n = Index(total);
        const std::size_t k = factors.size();

        auto decode = [&](Index x, std::vector<Index>& out) {
            for (std::size_t i = k; i-- > 0;) {
                out[i] = x % factors[i].size();
                x /= factors[i].size();
            }
        };
        auto encode = [&](const std::vector<Index>& in) {
            Index x = 0;
            for (std::size_t i = 0; i < k; ++i) x = x * factors[i].size() + in[i];
            return x;
        };

        std::vector<Index> table(std::size_t(n) * n), ta(k), tb(k), tc(k);
        for (Index a = 0; a < n; ++a) {
            decode(a, ta);
            for (Index b = 0; b < n; ++b) {
                decode(b, tb);
                for (std::size_t i = 0; i < k; ++i) tc[i] = factors[i].op(ta[i], tb[i]);
                table[std::size_t(a) * n + b] = encode(tc);
            }
        }
        std::vector<Index> ids(k);
        for (std::size_t i = 0; i < k; ++i) ids[i] = factors[i].identity();
        Index identity = encode(ids);

        // cyclic factors get generator names g1, g2, ...
        std::vector<std::string> names(n);
        for (Index x = 0; x < n; ++x) {
            decode(x, ta);
            std::string s;
            for (std::size_t i = 0; i < k; ++i) {
                if (ta[i] == factors[i].identity()) continue;
                if (!s.empty()) s += "*";
                std::string base = factors[i].name(ta[i]);
                if (base == "g" || base.rfind("g^", 0) == 0)
                    s += "g" + std::to_string(i + 1) + base.substr(1);
                else
                    s += "(" + base + ")";
            }
            names[x] = s.empty() ? "1" : s;
        }

        std::string label;
        for (std::size_t i = 0; i < k; ++i) {
            if (i) label += "x";
            label += factors[i].label();
        }
        return FiniteGroup(label, n, identity, std::move(table), std::move(names));
    }

    /// Product of cyclic groups C(n1) x C(n2) x ...
    static FiniteGroup from_cyclic_orders(const std::vector<Index>& orders) {
        std::vector<FiniteGroup> factors;
        for (Index n : orders) factors.push_back(cyclic(n));
        return product(factors);
    }

    /// Explicit Cayley table; group axioms are checked.
    static FiniteGroup from_table(std::string label, Index size, Index identity, std::vector<Index> table) {
        if (size == 0 || identity >= size || table.size() != std::size_t(size) * size)
            throw input_error("malformed group table for " + label);
        for (Index v : table)
            if (v >= size) throw input_error("group table entry out of range for " + label);
        std::vector<std::string> names(size);
        for (Index x = 0; x < size; ++x) names[x] = x == identity ? "1" : "h" + std::to_string(x);
        FiniteGroup g(std::move(label), size, identity, std::move(table), std::move(names));
        std::string axiom = g.first_violated_axiom();
        if (!axiom.empty()) throw input_error("group table for " + g.label() + " violates " + axiom);
        return g;
    }

    Index size() const noexcept { return size_; }
    Index identity() const noexcept { return identity_; }
    const std::string& label() const noexcept { return label_; }
    bool abelian() const noexcept { return abelian_; }
    const std::string& name(Index x) const { return names_.at(x); }

    Index op(Index a, Index b) const { return table_[std::size_t(a) * size_ + b]; }
    Index inv(Index a) const { return inverse_.at(a); }

    Index order(Index x) const {
        Index p = x;
        Index k = 1;
        while (p != identity_) {
            p = op(p, x);
            ++k;
        }
        return k;
    }

    /// Least common multiple of the element orders.
    Index exponent() const {
        Index e = 1;
        for (Index x = 0; x < size_; ++x) e = std::lcm(e, order(x));
        return e;
    }

    /// Empty string when the table is a group.
    std::string first_violated_axiom() const {
        for (Index a = 0; a < size_; ++a) {
            if (op(identity_, a) != a || op(a, identity_) != a) return "identity";
            if (inverse_[a] == Index(-1)) return "inverses";
        }
        for (Index a = 0; a < size_; ++a)
            for (Index b = 0; b < size_; ++b)
                for (Index c = 0; c < size_; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c))) return "associativity";
        return {};
    }

private:
    FiniteGroup(std::string label, Index size, Index identity, std::vector<Index> table,
                std::vector<std::string> names)
        : label_(std::move(label)), size_(size), identity_(identity), table_(std::move(table)),
          names_(std::move(names)) {
        inverse_.assign(size_, Index(-1));
        for (Index a = 0; a < size_; ++a)
            for (Index b = 0; b < size_; ++b)
                if (op(a, b) == identity_ && op(b, a) == identity_) {
                    inverse_[a] = b;
                    break;
                }
        abelian_ = true;
        for (Index a = 0; a < size_ && abelian_; ++a)
            for (Index b = a + 1; b < size_ && abelian_; ++b) abelian_ = op(a, b) == op(b, a);
    }

    std::string label_;
    Index size_;
    Index identity_;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
    std::vector<std::string> names_;
    bool abelian_ = true;
};

} // namespace gncring
