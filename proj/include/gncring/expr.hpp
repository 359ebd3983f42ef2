#pragma once

/**
 * @file expr.hpp
 * @brief Ring-expression language: parser, canonical printer, and builder.
 *
 * Grammar (whitespace-insensitive):
 *
 *     expr     := "Zn(" int ")" | "Prod(" expr {"," expr} ")" | "M(" int "," expr ")"
 *               | "T(" int "," expr ")" | "S(" int "," expr ")" | "Triv(" expr ")"
 *               | "Rn(" expr "," int ")" | "Anm(" expr "," int "," int ")"
 *               | "Bnm(" expr "," int "," int ")" | "Ks(" expr "," int ")"
 *               | "Ms(" int "," expr "," int ")" | "TT(" expr "," expr "," modspec ")"
 *               | "RG(" expr "," group ")" | name
 *     group    := "C(" int ")" {"x" "C(" int ")"}
 *     modspec  := "regular" | "zero"
 *
 * A bare name refers to a ring registered with the builder (for example one loaded from
 * Cayley JSON). The integer after Ks and the last integer of Ms are element indices of the
 * base ring.
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gncring/constructions.hpp"
#include "gncring/errors.hpp"

namespace gncring {

enum class ExprKind { zn, prod, matrix, upper, upper_const_diag, triv, rn, anm, bnm, ks, ms, tt, rg, named };

struct RingExpr {
    ExprKind kind = ExprKind::zn;
    std::vector<std::uint64_t> ints;   // integer arguments in source order
    std::vector<RingExpr> args;        // ring arguments in source order
    std::string mod;                   // TT only
    std::vector<std::uint64_t> group;  // RG only: cyclic orders
    std::string name;                  // named only

    friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

namespace detail {

struct Signature {
    const char* name;
    ExprKind kind;
    const char* shape; // one letter per argument: i integer, r ring, g group, m modspec; '+' = one or more rings
};

inline constexpr Signature signatures[] = {
    {"Zn", ExprKind::zn, "i"},         {"Prod", ExprKind::prod, "+"},   {"M", ExprKind::matrix, "ir"},
    {"T", ExprKind::upper, "ir"},      {"S", ExprKind::upper_const_diag, "ir"},
    {"Triv", ExprKind::triv, "r"},     {"Rn", ExprKind::rn, "ri"},      {"Anm", ExprKind::anm, "rii"},
    {"Bnm", ExprKind::bnm, "rii"},     {"Ks", ExprKind::ks, "ri"},      {"Ms", ExprKind::ms, "iri"},
    {"TT", ExprKind::tt, "rrm"},       {"RG", ExprKind::rg, "rg"},
};

inline const Signature& signature_of(ExprKind k) {
    for (const auto& s : signatures)
        if (s.kind == k) return s;
    throw input_error("no signature for expression kind");
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RingExpr parse() {
        RingExpr e = expr();
        skip();
        if (pos_ != s_.size()) throw parse_error("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    struct Arg {
        char type; // 'i', 'r', 'g', 'm'
        std::uint64_t value = 0;
        RingExpr ring;
        std::vector<std::uint64_t> group;
        std::string word;
        std::size_t pos = 0;
    };

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size()) throw parse_error(std::string("expected '") + c + "' but input ended", pos_);
        if (s_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "' but found '" + s_[pos_] + "'", pos_);
        ++pos_;
    }
    std::string identifier() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) {
            if (pos_ >= s_.size()) throw parse_error("expected a ring expression but input ended", pos_);
            throw parse_error("expected a ring expression but found '" + std::string(1, s_[pos_]) + "'", pos_);
        }
        return s_.substr(start, pos_ - start);
    }
    std::uint64_t integer() {
        skip();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            unsigned d = unsigned(s_[pos_] - '0');
            if (v > (std::uint64_t(-1) - d) / 10) throw parse_error("integer too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        if (start == pos_) throw parse_error("expected an integer", pos_);
        return v;
    }

    std::vector<std::uint64_t> group_tail(std::uint64_t first) {
        std::vector<std::uint64_t> orders{first};
        while (peek('x')) {
            ++pos_;
            std::size_t at = pos_;
            if (identifier() != "C") throw parse_error("expected 'C' after 'x' in a group", at);
            expect('(');
            orders.push_back(integer());
            expect(')');
        }
        return orders;
    }

    Arg argument() {
        skip();
        Arg a;
        a.pos = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            a.type = 'i';
            a.value = integer();
            return a;
        }
        std::string id = identifier();
        if (id == "C" && peek('(')) {
            expect('(');
            std::uint64_t n = integer();
            expect(')');
            a.type = 'g';
            a.group = group_tail(n);
            return a;
        }
        if (!peek('(')) {
            a.type = 'm';
            a.word = id;
            return a;
        }
        a.type = 'r';
        a.ring = constructor(id, a.pos);
        return a;
    }

    RingExpr expr() {
        skip();
        std::size_t at = pos_;
        std::string id = identifier();
        if (!peek('(')) {
            RingExpr e;
            e.kind = ExprKind::named;
            e.name = id;
            return e;
        }
        return constructor(id, at);
    }

    static const char* describe(char t) {
        switch (t) {
        case 'i': return "an integer";
        case 'r': return "a ring expression";
        case 'g': return "a group";
        case 'm': return "'regular' or 'zero'";
        }
        return "?";
    }

    RingExpr constructor(const std::string& id, std::size_t at) {
        const Signature* sig = nullptr;
        for (const auto& s : signatures)
            if (id == s.name) sig = &s;
        if (!sig) throw parse_error("unknown constructor '" + id + "'", at);

        expect('(');
        std::vector<Arg> args;
        if (!peek(')')) {
            args.push_back(argument());
            while (peek(',')) {
                ++pos_;
                args.push_back(argument());
            }
        }
        expect(')');

        RingExpr e;
        e.kind = sig->kind;
        const std::string shape = sig->shape;
        if (shape == "+") {
            if (args.empty()) throw parse_error(id + " needs at least one argument", at);
        } else if (args.size() != shape.size()) {
            throw parse_error(id + " takes " + std::to_string(shape.size()) + " argument" +
                                  (shape.size() == 1 ? "" : "s") + ", got " + std::to_string(args.size()),
                              at);
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
            char want = shape == "+" ? 'r' : shape[i];
            Arg& a = args[i];
            // a bare word in ring position is a named ring
            if (want == 'r' && a.type == 'm') {
                a.type = 'r';
                a.ring.kind = ExprKind::named;
                a.ring.name = a.word;
            }
            if (want == 'm' && a.type == 'm' && a.word != "regular" && a.word != "zero")
                throw parse_error(id + ": module must be 'regular' or 'zero', got '" + a.word + "'", a.pos);
            if (a.type != want)
                throw parse_error(id + ": argument " + std::to_string(i + 1) + " must be " + describe(want), a.pos);
            switch (want) {
            case 'i': e.ints.push_back(a.value); break;
            case 'r': e.args.push_back(std::move(a.ring)); break;
            case 'g': e.group = std::move(a.group); break;
            case 'm': e.mod = a.word; break;
            }
        }
        return e;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RingExpr parse_ring_expr(const std::string& text) { return detail::Parser(text).parse(); }

inline std::string group_text(const std::vector<std::uint64_t>& orders) {
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "xC(" : "C(") + std::to_string(orders[i]) + ")";
    return s;
}

/// Canonical form: no whitespace, arguments in source order.
inline std::string to_string(const RingExpr& e) {
    if (e.kind == ExprKind::named) return e.name;
    const auto& sig = detail::signature_of(e.kind);
    std::string out = std::string(sig.name) + "(";
    const std::string shape = sig.shape;
    if (shape == "+") {
        for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + to_string(e.args[i]);
        return out + ")";
    }
    std::size_t ni = 0, nr = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out += ",";
        switch (shape[i]) {
        case 'i': out += std::to_string(e.ints.at(ni++)); break;
        case 'r': out += to_string(e.args.at(nr++)); break;
        case 'g': out += group_text(e.group); break;
        case 'm': out += e.mod; break;
        }
    }
    return out + ")";
}

using NamedRings = std::map<std::string, FiniteRing>;

namespace detail {

inline Index small_int(std::uint64_t v, const char* what) {
    if (v > 0xffffffffull) throw capacity_error(std::string(what) + " is too large", v);
    return Index(v);
}

} // namespace detail

inline FiniteGroup build_group(const std::vector<std::uint64_t>& orders) {
    std::vector<Index> o;
    for (auto n : orders) {
        if (n == 0) throw input_error("C: group order must be at least 1");
        o.push_back(detail::small_int(n, "group order"));
    }
    return FiniteGroup::from_cyclic_orders(o);
}

inline FiniteRing build_ring(const RingExpr& e, const BuildOptions& opt = {}, const NamedRings& named = {}) {
    auto sub = [&](std::size_t i) { return build_ring(e.args.at(i), opt, named); };
    auto integer = [&](std::size_t i, const char* what) { return detail::small_int(e.ints.at(i), what); };
    switch (e.kind) {
    case ExprKind::zn: return build_zn(e.ints.at(0), opt);
    case ExprKind::prod: {
        std::vector<FiniteRing> fs;
        for (std::size_t i = 0; i < e.args.size(); ++i) fs.push_back(sub(i));
        return build_product(fs, opt);
    }
    case ExprKind::matrix: return build_matrix(sub(0), integer(0, "matrix size"), MatrixShape::full, opt);
    case ExprKind::upper: return build_matrix(sub(0), integer(0, "matrix size"), MatrixShape::upper, opt);
    case ExprKind::upper_const_diag:
        return build_matrix(sub(0), integer(0, "matrix size"), MatrixShape::upper_const_diag, opt);
    case ExprKind::triv: return build_trivial_extension(sub(0), std::nullopt, opt);
    case ExprKind::rn: return build_rn(sub(0), integer(0, "Rn degree"), opt);
    case ExprKind::anm: return build_anm(sub(0), integer(0, "Anm n"), integer(1, "Anm m"), opt);
    case ExprKind::bnm: return build_bnm(sub(0), integer(0, "Bnm n"), integer(1, "Bnm m"), opt);
    case ExprKind::ks: {
        FiniteRing base = sub(0);
        if (e.ints.at(0) >= base.size())
            throw input_error("Ks: element index " + std::to_string(e.ints[0]) + " out of range for " + base.label());
        return build_ks(base, Index(e.ints[0]), opt);
    }
    case ExprKind::ms: {
        FiniteRing base = sub(0);
        if (e.ints.at(1) >= base.size())
            throw input_error("Ms: element index " + std::to_string(e.ints[1]) + " out of range for " + base.label());
        return build_formal_matrix(base, integer(0, "matrix size"), Index(e.ints[1]), opt);
    }
    case ExprKind::tt: {
        FiniteRing r = sub(0), s = sub(1);
        BimoduleTable m = e.mod == "zero" ? zero_bimodule(r, s) : regular_bimodule(r, s);
        return build_formal_triangular(r, s, m, opt);
    }
    case ExprKind::rg: return build_group_ring(sub(0), build_group(e.group), opt);
    case ExprKind::named: {
        auto it = named.find(e.name);
        if (it == named.end()) throw input_error("unknown ring name '" + e.name + "'");
        return it->second;
    }
    }
    throw input_error("unsupported expression");
}

inline FiniteRing build_ring(const std::string& text, const BuildOptions& opt = {}, const NamedRings& named = {}) {
    return build_ring(parse_ring_expr(text), opt, named);
}

} // namespace gncring
