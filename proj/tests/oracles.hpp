#pragma once

// Brute-force references used by the tests. Nothing here calls the cached element scan.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gncring/finite_ring.hpp"

namespace oracle {

using gncring::FiniteRing;
using gncring::Index;

inline Index naive_power(const FiniteRing& r, Index x, std::uint64_t k) {
    Index acc = r.one();
    for (std::uint64_t i = 0; i < k; ++i) acc = r.mul(acc, x);
    return acc;
}

inline std::optional<Index> naive_inverse(const FiniteRing& r, Index x) {
    for (Index y = 0; y < r.size(); ++y)
        if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
    return std::nullopt;
}

inline bool naive_unit(const FiniteRing& r, Index x) { return naive_inverse(r, x).has_value(); }

// x^n = 0 where n = |R| bounds every nilpotency index
inline bool naive_nilpotent(const FiniteRing& r, Index x) { return naive_power(r, x, r.size()) == r.zero(); }

inline bool naive_idempotent(const FiniteRing& r, Index x) { return r.mul(x, x) == x; }

inline Index naive_neg(const FiniteRing& r, Index x) {
    for (Index y = 0; y < r.size(); ++y)
        if (r.add(x, y) == r.zero()) return y;
    return gncring::no_index;
}

/// x in J iff 1 - a*x*b is a unit for all a, b.
inline std::set<Index> two_sided_jacobson(const FiniteRing& r) {
    std::vector<bool> unit(r.size());
    for (Index x = 0; x < r.size(); ++x) unit[x] = naive_unit(r, x);
    std::vector<Index> neg(r.size());
    for (Index x = 0; x < r.size(); ++x) neg[x] = naive_neg(r, x);
    std::set<Index> out;
    for (Index x = 0; x < r.size(); ++x) {
        bool in = true;
        for (Index a = 0; a < r.size() && in; ++a) {
            const Index ax = r.mul(a, x);
            for (Index b = 0; b < r.size() && in; ++b) in = unit[r.add(r.one(), neg[r.mul(ax, b)])];
        }
        if (in) out.insert(x);
    }
    return out;
}

inline std::uint64_t radical(std::uint64_t n) {
    std::uint64_t rad = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            rad *= p;
            while (n % p == 0) n /= p;
        }
    return n > 1 ? rad * n : rad;
}

inline bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Mixed-radix digits with the first digit most significant.
inline std::vector<Index> digits(Index x, Index base, std::size_t count) {
    std::vector<Index> d(count);
    for (std::size_t i = count; i-- > 0;) {
        d[i] = x % base;
        x /= base;
    }
    return d;
}

inline Index from_digits(const std::vector<Index>& d, Index base) {
    Index x = 0;
    for (Index v : d) x = x * base + v;
    return x;
}

template <class T>
std::set<Index> as_set(const T& range) {
    return std::set<Index>(range.begin(), range.end());
}

} // namespace oracle
