#pragma once

/**
 * @file constructions.hpp
 * @brief The ring families: Z_n, products, matrix and triangular rings, trivial extensions,
 *        truncated polynomial rings, generalized and formal matrix rings, group rings, quotients.
 *
 * Every family is a "tuple ring": the carrier is a product of small additive groups
 * (copies of base rings or bimodules), encoded in mixed radix with the first coordinate
 * most significant, addition is coordinatewise, and the product is a formula on
 * coordinate vectors. Rings of size at most BuildOptions::materialize_limit get tables;
 * larger ones evaluate the formula on demand.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gncring/errors.hpp"
#include "gncring/finite_ring.hpp"
#include "gncring/group.hpp"

namespace gncring {

struct BuildOptions {
    std::uint64_t carrier_cap = 1ull << 20;
    std::uint64_t materialize_limit = default_materialize_limit;
};

enum class MatrixShape { full, upper, upper_const_diag };

// ---------------------------------------------------------------------------
// construction metadata attached to rings (FiniteRing::structure<T>())

/// Z_n itself.
struct ZnInfo {
    Index modulus;
};

/// Families with a nil ideal I = {leading coordinate = 0} and R/I equal to the base ring:
/// the leading coordinate of x is x / block.
struct LeadingCoordinateInfo {
    FiniteRing base;
    Index block;
};

struct ProductInfo {
    std::vector<FiniteRing> factors;
};

struct MatrixInfo {
    FiniteRing base;
    Index n;
    MatrixShape shape;
};

struct GroupRingInfo {
    FiniteRing base;
    FiniteGroup group;
};

/// Twisted 2x2 ring K_s(R) or n x n formal matrix ring M_n(R; s).
struct FormalMatrixInfo {
    FiniteRing base;
    Index n;
    Index s;
};

struct TriangularInfo {
    FiniteRing left;
    FiniteRing right;
};

// ---------------------------------------------------------------------------
// bimodules

/// An (R,S)-bimodule given by tables: additive group of M, left action R x M -> M,
/// right action M x S -> M.
struct BimoduleTable {
    std::string label;
    FiniteRing left;
    FiniteRing right;
    Index size = 1;
    Index zero = 0;
    std::vector<Index> add;          // size*size
    std::vector<Index> neg;          // size
    std::vector<Index> left_action;  // left.size()*size, entry r*size + m
    std::vector<Index> right_action; // size*right.size(), entry m*right.size() + s
    Formatter format;

    Index plus(Index a, Index b) const { return add[std::size_t(a) * size + b]; }
    Index act_left(Index r, Index m) const { return left_action[std::size_t(r) * size + m]; }
    Index act_right(Index m, Index s) const { return right_action[std::size_t(m) * right.size() + s]; }
};

namespace detail {

inline std::uint64_t checked_size(const std::vector<std::uint64_t>& radices, std::uint64_t cap,
                                  const std::string& what) {
    std::uint64_t total = 1;
    bool overflow = false;
    for (auto r : radices) {
        if (r == 0) return 0;
        if (total > std::uint64_t(-1) / r) overflow = true;
        else total *= r;
    }
    if (overflow || total > cap) {
        std::string need = overflow ? std::string("more than 2^64") : std::to_string(total);
        throw capacity_error(what + " needs a carrier of " + need + " elements, above the cap of " +
                                 std::to_string(cap),
                             overflow ? std::uint64_t(-1) : total);
    }
    return total;
}

inline constexpr std::size_t max_coordinates = 64;
using Coords = std::array<Index, max_coordinates>;

/// One coordinate of a tuple ring: an additive group plus a printer.
struct Coordinate {
    Index size;
    Index zero;
    std::function<Index(Index, Index)> add;
    std::function<Index(Index)> neg;
    std::vector<Index> generators;
    Formatter format;

    static Coordinate of(const FiniteRing& r) {
        return {r.size(), r.zero(), [r](Index a, Index b) { return r.add(a, b); },
                [r](Index a) { return r.neg(a); }, r.additive_generators(),
                [r](Index a) { return r.format(a); }};
    }

    static Coordinate of(const BimoduleTable& m) {
        auto shared = std::make_shared<BimoduleTable>(m);
        std::vector<Index> gens;
        {
            // greedy generating set of (M, +)
            std::vector<bool> seen(m.size, false);
            std::vector<Index> span{m.zero};
            seen[m.zero] = true;
            for (Index c = 0; c < m.size && span.size() < m.size; ++c) {
                if (seen[c]) continue;
                gens.push_back(c);
                for (std::size_t i = 0; i < span.size(); ++i)
                    for (Index g : gens) {
                        Index s = m.plus(span[i], g);
                        if (!seen[s]) {
                            seen[s] = true;
                            span.push_back(s);
                        }
                    }
            }
        }
        return {m.size, m.zero, [shared](Index a, Index b) { return shared->plus(a, b); },
                [shared](Index a) { return shared->neg[a]; }, std::move(gens),
                [shared](Index a) { return shared->format ? shared->format(a) : std::to_string(a); }};
    }
};

using TupleProduct = std::function<void(const Index* a, const Index* b, Index* out)>;
using TupleFormatter = std::function<std::string(const Index* t)>;

class TupleLayout {
public:
    explicit TupleLayout(std::vector<Coordinate> coords) : coords_(std::move(coords)) {}

    std::size_t count() const { return coords_.size(); }
    const Coordinate& operator[](std::size_t i) const { return coords_[i]; }

    void decode(Index x, Index* out) const {
        for (std::size_t i = coords_.size(); i-- > 0;) {
            out[i] = x % coords_[i].size;
            x /= coords_[i].size;
        }
    }
    Index encode(const Index* in) const {
        Index x = 0;
        for (std::size_t i = 0; i < coords_.size(); ++i) x = x * coords_[i].size + in[i];
        return x;
    }

private:
    std::vector<Coordinate> coords_;
};

/// Assembles a FiniteRing from coordinates, a product formula on coordinate vectors and the identity tuple.
inline FiniteRing make_tuple_ring(std::string label, std::vector<Coordinate> coords, TupleProduct product,
                                  std::vector<Index> one, TupleFormatter format, std::any structure,
                                  const BuildOptions& opt) {
    std::vector<std::uint64_t> radices;
    for (const auto& c : coords) radices.push_back(c.size);
    const std::uint64_t size = checked_size(radices, opt.carrier_cap, label);

    if (size == 1) {
        FiniteRing::Definition d;
        d.label = std::move(label);
        d.add = [](Index, Index) { return Index(0); };
        d.mul = [](Index, Index) { return Index(0); };
        d.format = [](Index) { return std::string("0"); };
        d.structure = std::move(structure);
        return FiniteRing(std::move(d), opt.materialize_limit);
    }
    if (coords.size() > max_coordinates)
        throw capacity_error(label + " has more than " + std::to_string(max_coordinates) + " coordinates", size);

    auto layout = std::make_shared<const TupleLayout>(std::move(coords));
    const std::size_t k = layout->count();

    FiniteRing::Definition d;
    d.label = std::move(label);
    d.size = Index(size);
    {
        Coords z{};
        for (std::size_t i = 0; i < k; ++i) z[i] = (*layout)[i].zero;
        d.zero = layout->encode(z.data());
        d.one = layout->encode(one.data());
    }
    d.add = [layout, k](Index a, Index b) {
        Coords ta, tb;
        layout->decode(a, ta.data());
        layout->decode(b, tb.data());
        for (std::size_t i = 0; i < k; ++i) ta[i] = (*layout)[i].add(ta[i], tb[i]);
        return layout->encode(ta.data());
    };
    d.neg = [layout, k](Index a) {
        Coords ta;
        layout->decode(a, ta.data());
        for (std::size_t i = 0; i < k; ++i) ta[i] = (*layout)[i].neg(ta[i]);
        return layout->encode(ta.data());
    };
    d.mul = [layout, product](Index a, Index b) {
        Coords ta, tb, tc;
        layout->decode(a, ta.data());
        layout->decode(b, tb.data());
        product(ta.data(), tb.data(), tc.data());
        return layout->encode(tc.data());
    };
    d.format = [layout, format](Index x) {
        Coords t;
        layout->decode(x, t.data());
        return format(t.data());
    };
    // coordinate generators placed in their slot
    for (std::size_t i = 0; i < k; ++i)
        for (Index g : (*layout)[i].generators) {
            Coords t;
            for (std::size_t j = 0; j < k; ++j) t[j] = (*layout)[j].zero;
            t[i] = g;
            d.additive_generators.push_back(layout->encode(t.data()));
        }
    if (d.additive_generators.empty()) d.additive_generators.push_back(d.zero);
    d.structure = std::move(structure);
    return FiniteRing(std::move(d), opt.materialize_limit);
}

/// Coefficient text for sums like "2+2g": parenthesized unless atomic.
inline std::string coefficient_text(const std::string& s) {
    if (s.find_first_of("+,[( *") == std::string::npos) return s;
    return "(" + s + ")";
}

/// a_0 + a_1 m_1 + ... with unit coefficients elided and zero terms dropped.
inline std::string linear_combination(const FiniteRing& base, const Index* coeffs,
                                      const std::vector<std::string>& monomials) {
    std::string out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (coeffs[i] == base.zero()) continue;
        if (!out.empty()) out += "+";
        const std::string& m = monomials[i];
        if (m.empty() || m == "1") out += base.format(coeffs[i]);
        else if (coeffs[i] == base.one()) out += m;
        else out += coefficient_text(base.format(coeffs[i])) + m;
    }
    return out.empty() ? base.format(base.zero()) : out;
}

inline std::string matrix_text(const std::vector<std::string>& entries, Index rows, Index cols) {
    std::string s = "[";
    for (Index i = 0; i < rows; ++i) {
        s += i ? ",[" : "[";
        for (Index j = 0; j < cols; ++j) {
            if (j) s += ",";
            s += entries[std::size_t(i) * cols + j];
        }
        s += "]";
    }
    return s + "]";
}

inline void require_central(const FiniteRing& base, Index s, const std::string& who) {
    base.check_index(s);
    if (!base.sets().center.contains(s))
        throw input_error(who + ": element " + std::to_string(s) + " is not central in " + base.label());
}

} // namespace detail

// ---------------------------------------------------------------------------
// Z_n and products

inline FiniteRing build_zn(std::uint64_t n, const BuildOptions& opt = {}) {
    if (n == 0) throw input_error("Zn: modulus must be at least 1");
    const std::string label = "Zn(" + std::to_string(n) + ")";
    detail::checked_size({n}, opt.carrier_cap, label);
    FiniteRing::Definition d;
    d.label = label;
    d.size = Index(n);
    d.zero = 0;
    d.one = n == 1 ? 0 : 1;
    const std::uint64_t m = n;
    d.add = [m](Index a, Index b) { return Index((std::uint64_t(a) + b) % m); };
    d.mul = [m](Index a, Index b) { return Index((std::uint64_t(a) * b) % m); };
    d.neg = [m](Index a) { return Index((m - a) % m); };
    if (n > 1) d.additive_generators = {1};
    d.structure = ZnInfo{Index(n)};
    return FiniteRing(std::move(d), opt.materialize_limit);
}

inline FiniteRing build_product(const std::vector<FiniteRing>& factors, const BuildOptions& opt = {}) {
    if (factors.empty()) throw input_error("Prod: needs at least one factor");
    std::string label = "Prod(";
    std::vector<detail::Coordinate> coords;
    std::vector<Index> one;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        label += (i ? "," : "") + factors[i].label();
        coords.push_back(detail::Coordinate::of(factors[i]));
        one.push_back(factors[i].one());
    }
    label += ")";
    auto fs = factors;
    auto product = [fs](const Index* a, const Index* b, Index* out) {
        for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fs[i].mul(a[i], b[i]);
    };
    auto format = [fs](const Index* t) {
        std::string s = "(";
        for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? "," : "") + fs[i].format(t[i]);
        return s + ")";
    };
    return detail::make_tuple_ring(label, std::move(coords), product, one, format, ProductInfo{factors}, opt);
}

// ---------------------------------------------------------------------------
// matrix rings M_n(R), T_n(R), S_n(R)

inline FiniteRing build_matrix(const FiniteRing& base, Index n, MatrixShape shape, const BuildOptions& opt = {}) {
    if (n == 0) throw input_error("matrix size must be at least 1");
    const char* tag = shape == MatrixShape::full ? "M" : shape == MatrixShape::upper ? "T" : "S";
    const std::string label = std::string(tag) + "(" + std::to_string(n) + "," + base.label() + ")";

    // free entries in row-major order; for S_n the shared diagonal is entry (0,0)
    std::vector<std::pair<Index, Index>> free;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            bool keep = shape == MatrixShape::full || (shape == MatrixShape::upper && i <= j) ||
                        (shape == MatrixShape::upper_const_diag && (i < j || (i == 0 && j == 0)));
            if (keep) free.emplace_back(i, j);
        }
    std::vector<std::uint64_t> radices(free.size(), base.size());
    detail::checked_size(radices, opt.carrier_cap, label);
    if (n * n > detail::max_coordinates && base.size() > 1)
        throw capacity_error(label + " has too many entries", std::uint64_t(-1));

    std::vector<detail::Coordinate> coords(free.size(), detail::Coordinate::of(base));
    const std::size_t nn = std::size_t(n) * n;

    // slot of each full-matrix position: index into free, or -1 (zero), or -2 (copy of diagonal)
    std::vector<int> slot(nn, -1);
    for (std::size_t f = 0; f < free.size(); ++f) slot[free[f].first * n + free[f].second] = int(f);
    if (shape == MatrixShape::upper_const_diag)
        for (Index i = 1; i < n; ++i) slot[i * n + i] = -2;

    auto expand = [base, slot](const Index* t, Index* m) {
        for (std::size_t p = 0; p < slot.size(); ++p)
            m[p] = slot[p] >= 0 ? t[slot[p]] : slot[p] == -2 ? t[0] : base.zero();
    };
    auto product = [base, n, slot, free, expand](const Index* a, const Index* b, Index* out) {
        detail::Coords ma, mb;
        expand(a, ma.data());
        expand(b, mb.data());
        for (std::size_t f = 0; f < free.size(); ++f) {
            auto [i, j] = free[f];
            Index acc = base.zero();
            for (Index k = 0; k < n; ++k) acc = base.add(acc, base.mul(ma[i * n + k], mb[k * n + j]));
            out[f] = acc;
        }
    };
    auto format = [base, n, expand, nn](const Index* t) {
        detail::Coords m;
        expand(t, m.data());
        std::vector<std::string> e(nn);
        for (std::size_t p = 0; p < nn; ++p) e[p] = base.format(m[p]);
        return detail::matrix_text(e, n, n);
    };
    std::vector<Index> one(free.size(), base.zero());
    for (std::size_t f = 0; f < free.size(); ++f)
        if (free[f].first == free[f].second) one[f] = base.one();

    std::any info;
    if (shape == MatrixShape::upper_const_diag) {
        Index block = 1;
        for (std::size_t f = 1; f < free.size(); ++f) block *= base.size();
        info = LeadingCoordinateInfo{base, block};
    } else {
        info = MatrixInfo{base, n, shape};
    }
    return detail::make_tuple_ring(label, std::move(coords), product, one, format, std::move(info), opt);
}

// ---------------------------------------------------------------------------
// bimodules and the trivial extension

inline BimoduleTable regular_bimodule(const FiniteRing& r) {
    BimoduleTable m;
    m.label = "regular";
    m.left = r;
    m.right = r;
    m.size = r.size();
    m.zero = r.zero();
    const std::size_t n = r.size();
    m.add.resize(n * n);
    m.left_action.resize(n * n);
    m.right_action.resize(n * n);
    m.neg.resize(n);
    for (Index a = 0; a < n; ++a) {
        m.neg[a] = r.neg(a);
        for (Index b = 0; b < n; ++b) {
            m.add[a * n + b] = r.add(a, b);
            m.left_action[a * n + b] = r.mul(a, b);
            m.right_action[a * n + b] = r.mul(a, b);
        }
    }
    m.format = [r](Index x) { return r.format(x); };
    return m;
}

inline BimoduleTable zero_bimodule(const FiniteRing& r, const FiniteRing& s) {
    BimoduleTable m;
    m.label = "zero";
    m.left = r;
    m.right = s;
    m.size = 1;
    m.zero = 0;
    m.add = {0};
    m.neg = {0};
    m.left_action.assign(r.size(), 0);
    m.right_action.assign(s.size(), 0);
    m.format = [](Index) { return std::string("0"); };
    return m;
}

/// S as an (R,S)-bimodule through a unital homomorphism R -> S: the identity when R and S
/// have the same tables, k -> k*1_S when R = Z_n and the characteristic of S divides n.
inline BimoduleTable regular_bimodule(const FiniteRing& r, const FiniteRing& s) {
    std::vector<Index> phi(r.size());
    if (r.same_tables(s)) {
        for (Index x = 0; x < r.size(); ++x) phi[x] = x;
    } else if (const auto* zn = r.structure<ZnInfo>()) {
        if (s.times(zn->modulus, s.one()) != s.zero())
            throw input_error("regular bimodule: characteristic of " + s.label() + " does not divide " +
                              std::to_string(zn->modulus));
        for (Index x = 0; x < r.size(); ++x) phi[x] = s.times(x, s.one());
    } else {
        throw input_error("regular bimodule: no canonical homomorphism " + r.label() + " -> " + s.label());
    }
    BimoduleTable m = regular_bimodule(s);
    m.left = r;
    m.left_action.assign(std::size_t(r.size()) * s.size(), 0);
    for (Index x = 0; x < r.size(); ++x)
        for (Index y = 0; y < s.size(); ++y) m.left_action[std::size_t(x) * s.size() + y] = s.mul(phi[x], y);
    return m;
}

/// Empty string when the tables form an (R,S)-bimodule, else the violated law.
inline std::string bimodule_violation(const BimoduleTable& m) {
    const Index n = m.size;
    const FiniteRing& R = m.left;
    const FiniteRing& S = m.right;
    if (m.add.size() != std::size_t(n) * n || m.neg.size() != n ||
        m.left_action.size() != std::size_t(R.size()) * n || m.right_action.size() != std::size_t(n) * S.size())
        return "table dimensions";
    for (Index v : m.add) if (v >= n) return "closure of addition";
    for (Index v : m.left_action) if (v >= n) return "closure of left action";
    for (Index v : m.right_action) if (v >= n) return "closure of right action";
    for (Index a = 0; a < n; ++a) {
        if (m.plus(m.zero, a) != a) return "additive identity";
        if (m.plus(a, m.neg[a]) != m.zero) return "additive inverse";
        if (m.act_left(R.one(), a) != a) return "unital left action";
        if (m.act_right(a, S.one()) != a) return "unital right action";
        for (Index b = 0; b < n; ++b) {
            if (m.plus(a, b) != m.plus(b, a)) return "additive commutativity";
            for (Index c = 0; c < n; ++c)
                if (m.plus(m.plus(a, b), c) != m.plus(a, m.plus(b, c))) return "additive associativity";
        }
    }
    for (Index r = 0; r < R.size(); ++r)
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (m.act_left(r, m.plus(a, b)) != m.plus(m.act_left(r, a), m.act_left(r, b)))
                    return "left action additive in the module";
    for (Index r = 0; r < R.size(); ++r)
        for (Index r2 = 0; r2 < R.size(); ++r2)
            for (Index a = 0; a < n; ++a) {
                if (m.act_left(R.add(r, r2), a) != m.plus(m.act_left(r, a), m.act_left(r2, a)))
                    return "left action additive in the ring";
                if (m.act_left(R.mul(r, r2), a) != m.act_left(r, m.act_left(r2, a)))
                    return "left action associativity";
            }
    for (Index s = 0; s < S.size(); ++s)
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (m.act_right(m.plus(a, b), s) != m.plus(m.act_right(a, s), m.act_right(b, s)))
                    return "right action additive in the module";
    for (Index s = 0; s < S.size(); ++s)
        for (Index s2 = 0; s2 < S.size(); ++s2)
            for (Index a = 0; a < n; ++a) {
                if (m.act_right(a, S.add(s, s2)) != m.plus(m.act_right(a, s), m.act_right(a, s2)))
                    return "right action additive in the ring";
                if (m.act_right(a, S.mul(s, s2)) != m.act_right(m.act_right(a, s), s2))
                    return "right action associativity";
            }
    for (Index r = 0; r < R.size(); ++r)
        for (Index a = 0; a < n; ++a)
            for (Index s = 0; s < S.size(); ++s)
                if (m.act_right(m.act_left(r, a), s) != m.act_left(r, m.act_right(a, s)))
                    return "(rm)s = r(ms)";
    return {};
}

inline void require_bimodule(const BimoduleTable& m) {
    std::string v = bimodule_violation(m);
    if (!v.empty()) throw input_error("invalid bimodule " + m.label + ": " + v);
}

/// R x M with (r,m)(r',m') = (rr', rm' + mr'); M defaults to R itself.
inline FiniteRing build_trivial_extension(const FiniteRing& base, const std::optional<BimoduleTable>& module = {},
                                          const BuildOptions& opt = {}) {
    BimoduleTable m = module ? *module : regular_bimodule(base);
    if (!m.left.same_tables(base) || !m.right.same_tables(base))
        throw input_error("Triv: bimodule must be over " + base.label() + " on both sides");
    if (module) require_bimodule(m);
    std::string label = "Triv(" + base.label() + (module && m.label != "regular" ? "," + m.label : "") + ")";
    auto mp = std::make_shared<const BimoduleTable>(m);
    auto product = [base, mp](const Index* a, const Index* b, Index* out) {
        out[0] = base.mul(a[0], b[0]);
        out[1] = mp->plus(mp->act_left(a[0], b[1]), mp->act_right(a[1], b[0]));
    };
    auto format = [base, mp](const Index* t) {
        std::string ms = mp->format ? mp->format(t[1]) : std::to_string(t[1]);
        return "(" + base.format(t[0]) + "," + ms + ")";
    };
    std::vector<detail::Coordinate> coords{detail::Coordinate::of(base), detail::Coordinate::of(m)};
    return detail::make_tuple_ring(label, std::move(coords), product, {base.one(), m.zero}, format,
                                   LeadingCoordinateInfo{base, m.size}, opt);
}

// ---------------------------------------------------------------------------
// truncated polynomial rings

/// R[x]/(x^n), coefficients a_0..a_{n-1} with a_0 most significant.
inline FiniteRing build_rn(const FiniteRing& base, Index n, const BuildOptions& opt = {}) {
    if (n < 2) throw input_error("Rn: n must be at least 2");
    const std::string label = "Rn(" + base.label() + "," + std::to_string(n) + ")";
    detail::checked_size(std::vector<std::uint64_t>(n, base.size()), opt.carrier_cap, label);
    auto product = [base, n](const Index* a, const Index* b, Index* out) {
        for (Index k = 0; k < n; ++k) {
            Index acc = base.zero();
            for (Index i = 0; i <= k; ++i) acc = base.add(acc, base.mul(a[i], b[k - i]));
            out[k] = acc;
        }
    };
    std::vector<std::string> mono(n);
    for (Index i = 0; i < n; ++i) mono[i] = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    auto format = [base, mono](const Index* t) { return detail::linear_combination(base, t, mono); };
    std::vector<Index> one(n, base.zero());
    one[0] = base.one();
    Index block = 1;
    for (Index i = 1; i < n; ++i) block *= base.size();
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(n, detail::Coordinate::of(base)), product,
                                   one, format, LeadingCoordinateInfo{base, block}, opt);
}

/// R[x,y | x^n = yx = y^m = 0] with xy = 0 imposed as well; basis 1, x..x^(n-1), y..y^(m-1).
inline FiniteRing build_anm(const FiniteRing& base, Index n, Index m, const BuildOptions& opt = {}) {
    if (n < 2 || m < 2) throw input_error("Anm: n and m must be at least 2");
    const std::string label = "Anm(" + base.label() + "," + std::to_string(n) + "," + std::to_string(m) + ")";
    const Index k = n + m - 1;
    detail::checked_size(std::vector<std::uint64_t>(k, base.size()), opt.carrier_cap, label);
    // slot 0 = constant, slots 1..n-1 = x^i, slots n..n+m-2 = y^j
    auto product = [base, n, m, k](const Index* a, const Index* b, Index* out) {
        auto xs = [n](Index i) { return i; };             // slot of x^i, i in 0..n-1 (0 = constant)
        auto ys = [n](Index j) { return j == 0 ? 0 : n + j - 1; };
        for (Index s = 0; s < k; ++s) out[s] = base.zero();
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; i + j < n; ++j)
                out[xs(i + j)] = base.add(out[xs(i + j)], base.mul(a[xs(i)], b[xs(j)]));
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; i + j < m; ++j) {
                if (i == 0 && j == 0) continue; // constant term already counted
                out[ys(i + j)] = base.add(out[ys(i + j)], base.mul(a[ys(i)], b[ys(j)]));
            }
    };
    std::vector<std::string> mono(k);
    mono[0] = "";
    for (Index i = 1; i < n; ++i) mono[i] = i == 1 ? "x" : "x^" + std::to_string(i);
    for (Index j = 1; j < m; ++j) mono[n + j - 1] = j == 1 ? "y" : "y^" + std::to_string(j);
    auto format = [base, mono](const Index* t) { return detail::linear_combination(base, t, mono); };
    std::vector<Index> one(k, base.zero());
    one[0] = base.one();
    Index block = 1;
    for (Index i = 1; i < k; ++i) block *= base.size();
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(k, detail::Coordinate::of(base)), product,
                                   one, format, LeadingCoordinateInfo{base, block}, opt);
}

/// R[x,y]/(x^n, y^m) with commuting x, y; basis x^i y^j in lexicographic (i, j) order.
inline FiniteRing build_bnm(const FiniteRing& base, Index n, Index m, const BuildOptions& opt = {}) {
    if (n < 2 || m < 2) throw input_error("Bnm: n and m must be at least 2");
    const std::string label = "Bnm(" + base.label() + "," + std::to_string(n) + "," + std::to_string(m) + ")";
    const Index k = n * m;
    detail::checked_size(std::vector<std::uint64_t>(k, base.size()), opt.carrier_cap, label);
    auto product = [base, n, m, k](const Index* a, const Index* b, Index* out) {
        for (Index s = 0; s < k; ++s) out[s] = base.zero();
        for (Index i1 = 0; i1 < n; ++i1)
            for (Index j1 = 0; j1 < m; ++j1) {
                Index av = a[i1 * m + j1];
                if (av == base.zero()) continue;
                for (Index i2 = 0; i1 + i2 < n; ++i2)
                    for (Index j2 = 0; j1 + j2 < m; ++j2) {
                        Index t = (i1 + i2) * m + (j1 + j2);
                        out[t] = base.add(out[t], base.mul(av, b[i2 * m + j2]));
                    }
            }
    };
    std::vector<std::string> mono(k);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) {
            std::string s;
            if (i) s += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j) s += j == 1 ? "y" : "y^" + std::to_string(j);
            mono[i * m + j] = s;
        }
    auto format = [base, mono](const Index* t) { return detail::linear_combination(base, t, mono); };
    std::vector<Index> one(k, base.zero());
    one[0] = base.one();
    Index block = 1;
    for (Index i = 1; i < k; ++i) block *= base.size();
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(k, detail::Coordinate::of(base)), product,
                                   one, format, LeadingCoordinateInfo{base, block}, opt);
}

// ---------------------------------------------------------------------------
// generalized and formal matrix rings

/// K_s(R): 2x2 arrays (a, x; y, b) with the product twisted by a central s on the corner terms.
inline FiniteRing build_ks(const FiniteRing& base, Index s, const BuildOptions& opt = {}) {
    detail::require_central(base, s, "Ks");
    const std::string label = "Ks(" + base.label() + "," + std::to_string(s) + ")";
    auto product = [base, s](const Index* p, const Index* q, Index* out) {
        // p = (a1, x1, y1, b1), q = (a2, x2, y2, b2)
        auto m = [&](Index u, Index v) { return base.mul(u, v); };
        auto add = [&](Index u, Index v) { return base.add(u, v); };
        out[0] = add(m(p[0], q[0]), m(s, m(p[1], q[2])));
        out[1] = add(m(p[0], q[1]), m(p[1], q[3]));
        out[2] = add(m(p[2], q[0]), m(p[3], q[2]));
        out[3] = add(m(s, m(p[2], q[1])), m(p[3], q[3]));
    };
    auto format = [base](const Index* t) {
        return detail::matrix_text({base.format(t[0]), base.format(t[1]), base.format(t[2]), base.format(t[3])}, 2, 2);
    };
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(4, detail::Coordinate::of(base)), product,
                                   {base.one(), base.zero(), base.zero(), base.one()}, format,
                                   FormalMatrixInfo{base, 2, s}, opt);
}

/// M_n(R; s): c_ij = sum_k s^(1 + [i=j] - [i=k] - [k=j]) a_ik b_kj.
inline FiniteRing build_formal_matrix(const FiniteRing& base, Index n, Index s, const BuildOptions& opt = {}) {
    if (n < 2) throw input_error("Ms: n must be at least 2");
    detail::require_central(base, s, "Ms");
    const std::string label = "Ms(" + std::to_string(n) + "," + base.label() + "," + std::to_string(s) + ")";
    const Index nn = n * n;
    detail::checked_size(std::vector<std::uint64_t>(nn, base.size()), opt.carrier_cap, label);
    const std::array<Index, 3> spow{base.one(), s, base.mul(s, s)};
    auto product = [base, n, spow](const Index* a, const Index* b, Index* out) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                Index acc = base.zero();
                for (Index k = 0; k < n; ++k) {
                    int e = 1 + (i == j) - (i == k) - (k == j);
                    Index term = base.mul(a[i * n + k], b[k * n + j]);
                    if (e != 0) term = base.mul(spow[e], term);
                    acc = base.add(acc, term);
                }
                out[i * n + j] = acc;
            }
    };
    auto format = [base, n](const Index* t) {
        std::vector<std::string> e(std::size_t(n) * n);
        for (std::size_t p = 0; p < e.size(); ++p) e[p] = base.format(t[p]);
        return detail::matrix_text(e, n, n);
    };
    std::vector<Index> one(nn, base.zero());
    for (Index i = 0; i < n; ++i) one[i * n + i] = base.one();
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(nn, detail::Coordinate::of(base)), product,
                                   one, format, FormalMatrixInfo{base, n, s}, opt);
}

/// T(R,S,M): triples (r, m, s) multiplied as upper triangular 2x2 matrices.
inline FiniteRing build_formal_triangular(const FiniteRing& r, const FiniteRing& s, const BimoduleTable& m,
                                          const BuildOptions& opt = {}) {
    if (!m.left.same_tables(r) || !m.right.same_tables(s))
        throw input_error("TT: bimodule is not over (" + r.label() + "," + s.label() + ")");
    require_bimodule(m);
    const std::string label = "TT(" + r.label() + "," + s.label() + "," + m.label + ")";
    auto mp = std::make_shared<const BimoduleTable>(m);
    auto product = [r, s, mp](const Index* a, const Index* b, Index* out) {
        out[0] = r.mul(a[0], b[0]);
        out[1] = mp->plus(mp->act_left(a[0], b[1]), mp->act_right(a[1], b[2]));
        out[2] = s.mul(a[2], b[2]);
    };
    auto format = [r, s, mp](const Index* t) {
        std::string ms = mp->format ? mp->format(t[1]) : std::to_string(t[1]);
        return detail::matrix_text({r.format(t[0]), ms, "0", s.format(t[2])}, 2, 2);
    };
    std::vector<detail::Coordinate> coords{detail::Coordinate::of(r), detail::Coordinate::of(m),
                                           detail::Coordinate::of(s)};
    return detail::make_tuple_ring(label, std::move(coords), product, {r.one(), m.zero, s.one()}, format,
                                   TriangularInfo{r, s}, opt);
}

// ---------------------------------------------------------------------------
// group rings

/// RG: coefficient vectors indexed by group elements (group element 0 most significant).
inline FiniteRing build_group_ring(const FiniteRing& base, const FiniteGroup& g, const BuildOptions& opt = {}) {
    const std::string label = "RG(" + base.label() + "," + g.label() + ")";
    const Index k = g.size();
    detail::checked_size(std::vector<std::uint64_t>(k, base.size()), opt.carrier_cap, label);
    auto product = [base, g, k](const Index* a, const Index* b, Index* out) {
        for (Index t = 0; t < k; ++t) out[t] = base.zero();
        for (Index x = 0; x < k; ++x) {
            if (a[x] == base.zero()) continue;
            for (Index y = 0; y < k; ++y) {
                Index t = g.op(x, y);
                out[t] = base.add(out[t], base.mul(a[x], b[y]));
            }
        }
    };
    std::vector<std::string> mono(k);
    for (Index x = 0; x < k; ++x) mono[x] = x == g.identity() ? "" : g.name(x);
    // print the identity coefficient first
    std::vector<Index> order(k);
    for (Index x = 0; x < k; ++x) order[x] = x;
    std::stable_partition(order.begin(), order.end(), [&](Index x) { return x == g.identity(); });
    auto format = [base, mono, order](const Index* t) {
        std::vector<Index> c(order.size());
        std::vector<std::string> m(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            c[i] = t[order[i]];
            m[i] = mono[order[i]];
        }
        return detail::linear_combination(base, c.data(), m);
    };
    std::vector<Index> one(k, base.zero());
    one[g.identity()] = base.one();
    return detail::make_tuple_ring(label, std::vector<detail::Coordinate>(k, detail::Coordinate::of(base)), product,
                                   one, format, GroupRingInfo{base, g}, opt);
}

/// Coefficients of a group-ring element, indexed by group element.
inline std::vector<Index> group_ring_coefficients(const FiniteRing& ring, Index x) {
    const auto* info = ring.structure<GroupRingInfo>();
    if (!info) throw input_error(ring.label() + " is not a group ring");
    ring.check_index(x);
    const Index k = info->group.size();
    std::vector<Index> c(k);
    for (Index i = k; i-- > 0;) {
        c[i] = x % info->base.size();
        x /= info->base.size();
    }
    return c;
}

/// Index of the group-ring element with the given coefficients.
inline Index group_ring_element(const FiniteRing& ring, const std::vector<Index>& coeffs) {
    const auto* info = ring.structure<GroupRingInfo>();
    if (!info) throw input_error(ring.label() + " is not a group ring");
    if (coeffs.size() != info->group.size()) throw input_error("wrong number of group-ring coefficients");
    Index x = 0;
    for (Index c : coeffs) {
        info->base.check_index(c);
        x = x * info->base.size() + c;
    }
    return x;
}

/// Augmentation: sum of coefficients, as an index of the base ring.
inline Index augmentation(const FiniteRing& ring, Index x) {
    const auto* info = ring.structure<GroupRingInfo>();
    if (!info) throw input_error("augmentation: " + ring.label() + " is not a group ring");
    Index sum = info->base.zero();
    for (Index c : group_ring_coefficients(ring, x)) sum = info->base.add(sum, c);
    return sum;
}

inline IndexSet augmentation_ideal(const FiniteRing& ring) {
    const auto* info = ring.structure<GroupRingInfo>();
    if (!info) throw input_error("augmentation ideal: " + ring.label() + " is not a group ring");
    std::vector<bool> mask(ring.size());
    for (Index x = 0; x < ring.size(); ++x) mask[x] = augmentation(ring, x) == info->base.zero();
    return IndexSet::from_mask(std::move(mask));
}

// ---------------------------------------------------------------------------
// ideals and quotients

/// Empty string when the set is a two-sided ideal, else the failing property.
inline std::string ideal_violation(const FiniteRing& ring, const IndexSet& set) {
    if (!set.contains(ring.zero())) return "does not contain zero";
    for (Index a : set)
        for (Index b : set)
            if (!set.contains(ring.sub(a, b))) return "not closed under subtraction";
    for (Index r = 0; r < ring.size(); ++r)
        for (Index a : set)
            if (!set.contains(ring.mul(r, a)) || !set.contains(ring.mul(a, r))) return "does not absorb products";
    return {};
}

struct Quotient {
    FiniteRing ring;
    std::vector<Index> class_of;       // element -> quotient index
    std::vector<Index> representative; // quotient index -> least element of the coset
};

/// R/I by coset tables; cosets are numbered by their least element.
inline Quotient quotient(const FiniteRing& ring, const IndexSet& ideal, const std::string& ideal_name = "I") {
    std::string v = ideal_violation(ring, ideal);
    if (!v.empty()) throw input_error("quotient of " + ring.label() + ": " + ideal_name + " " + v);
    const Index n = ring.size();
    Quotient q;
    q.class_of.assign(n, no_index);
    for (Index x = 0; x < n; ++x) {
        if (q.class_of[x] != no_index) continue;
        Index c = Index(q.representative.size());
        q.representative.push_back(x);
        for (Index i : ideal) q.class_of[ring.add(x, i)] = c;
    }
    const Index m = Index(q.representative.size());
    std::vector<Index> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            add[std::size_t(a) * m + b] = q.class_of[ring.add(q.representative[a], q.representative[b])];
            mul[std::size_t(a) * m + b] = q.class_of[ring.mul(q.representative[a], q.representative[b])];
        }
    q.ring = FiniteRing::from_tables(ring.label() + "/" + ideal_name, m, q.class_of[ring.zero()],
                                     q.class_of[ring.one()], std::move(add), std::move(mul));
    return q;
}

/// The ideal {leading coordinate = 0} of a family carrying LeadingCoordinateInfo.
inline IndexSet leading_coordinate_ideal(const FiniteRing& ring) {
    const auto* info = ring.structure<LeadingCoordinateInfo>();
    if (!info) throw input_error(ring.label() + " has no designated leading-coordinate ideal");
    std::vector<bool> mask(ring.size());
    for (Index x = 0; x < ring.size(); ++x) mask[x] = x / info->block == info->base.zero();
    return IndexSet::from_mask(std::move(mask));
}

/// Operation tables of a and b agree under the bijection a-index -> b-index.
inline bool tables_equal_under(const FiniteRing& a, const FiniteRing& b, const std::vector<Index>& map) {
    if (a.size() != b.size() || map.size() != a.size()) return false;
    if (map[a.zero()] != b.zero() || map[a.one()] != b.one()) return false;
    std::vector<bool> hit(b.size(), false);
    for (Index x : map) {
        if (x >= b.size() || hit[x]) return false;
        hit[x] = true;
    }
    for (Index x = 0; x < a.size(); ++x)
        for (Index y = 0; y < a.size(); ++y)
            if (map[a.add(x, y)] != b.add(map[x], map[y]) || map[a.mul(x, y)] != b.mul(map[x], map[y]))
                return false;
    return true;
}

} // namespace gncring
