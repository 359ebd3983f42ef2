#pragma once

/**
 * @file cayley_json.hpp
 * @brief Cayley-table JSON: {"label", "size", "zero", "one", "add", "mul"}; negation is derived.
 *
 * Loading always validates the ring axioms. Saving then loading reproduces identical tables.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gncring/errors.hpp"
#include "gncring/finite_ring.hpp"
#include "gncring/validate.hpp"

namespace gncring {

inline nlohmann::ordered_json to_cayley_json(const FiniteRing& ring) {
    const Index n = ring.size();
    nlohmann::ordered_json j;
    j["label"] = ring.label();
    j["size"] = n;
    j["zero"] = ring.zero();
    j["one"] = ring.one();
    auto table = [&](auto op) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Index a = 0; a < n; ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Index b = 0; b < n; ++b) row.push_back(op(a, b));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["add"] = table([&](Index a, Index b) { return ring.add(a, b); });
    j["mul"] = table([&](Index a, Index b) { return ring.mul(a, b); });
    return j;
}

inline std::string save_cayley_json(const FiniteRing& ring) { return to_cayley_json(ring).dump(); }

inline FiniteRing from_cayley_json(const nlohmann::json& j, const ValidationOptions& vopt = {}) {
    auto field = [&](const char* key) -> const nlohmann::json& {
        if (!j.is_object() || !j.contains(key)) throw input_error(std::string("Cayley JSON: missing \"") + key + "\"");
        return j.at(key);
    };
    auto index = [&](const nlohmann::json& v, const std::string& where) -> std::uint64_t {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw input_error("Cayley JSON: " + where + " must be a nonnegative integer");
        return v.get<std::uint64_t>();
    };
    const auto& label = field("label");
    if (!label.is_string()) throw input_error("Cayley JSON: \"label\" must be a string");
    const std::uint64_t n = index(field("size"), "\"size\"");
    if (n == 0 || n > 0xffffu) throw input_error("Cayley JSON: \"size\" must be between 1 and 65535");
    const std::uint64_t zero = index(field("zero"), "\"zero\"");
    const std::uint64_t one = index(field("one"), "\"one\"");
    auto table = [&](const char* key) {
        const auto& t = field(key);
        if (!t.is_array() || t.size() != n)
            throw input_error(std::string("Cayley JSON: \"") + key + "\" must have " + std::to_string(n) + " rows");
        std::vector<Index> out;
        out.reserve(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            const auto& row = t[a];
            if (!row.is_array() || row.size() != n)
                throw input_error(std::string("Cayley JSON: row ") + std::to_string(a) + " of \"" + key +
                                  "\" must have " + std::to_string(n) + " entries");
            for (std::size_t b = 0; b < n; ++b)
                out.push_back(Index(index(row[b], std::string("\"") + key + "\" entry")));
        }
        return out;
    };
    FiniteRing ring = FiniteRing::from_tables(label.get<std::string>(), Index(n), Index(zero), Index(one),
                                              table("add"), table("mul"));
    ValidationReport rep = validate(ring, vopt);
    if (!rep.valid) {
        std::string w;
        for (Index x : rep.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
        throw input_error("Cayley JSON: " + ring.label() + " violates " + rep.axiom + " at (" + w + ")");
    }
    return ring;
}

inline FiniteRing load_cayley_json(const std::string& text, const ValidationOptions& vopt = {}) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("Cayley JSON: ") + e.what());
    }
    return from_cayley_json(j, vopt);
}

inline FiniteRing load_cayley_file(const std::string& path, const ValidationOptions& vopt = {}) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_cayley_json(ss.str(), vopt);
}

inline void save_cayley_file(const FiniteRing& ring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << save_cayley_json(ring) << "\n";
}

/// GF(4) = F_2[x]/(x^2+x+1) with a0 + a1 x at index 2*a0 + a1.
inline const char* f4_cayley_json() {
    return R"({"label":"F4","size":4,"zero":0,"one":2,)"
           R"("add":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],)"
           R"("mul":[[0,0,0,0],[0,3,1,2],[0,1,2,3],[0,2,3,1]]})";
}

} // namespace gncring
