#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gncring/gncring.hpp"

using namespace gncring;

namespace {

nlohmann::json z2_json() {
    return nlohmann::json::parse(R"({"label":"Z2","size":2,"zero":0,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]})");
}

std::string rejection(const nlohmann::json& j) {
    try {
        from_cayley_json(j);
    } catch (const input_error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(CayleyJson, RoundTripIsBitExact) {
    for (const char* text : {"Zn(1)", "Zn(6)", "M(2,Zn(2))", "RG(Zn(3),C(2))", "TT(Zn(4),Zn(2),regular)"}) {
        FiniteRing r = build_ring(text);
        const std::string saved = save_cayley_json(r);
        FiniteRing back = load_cayley_json(saved);
        EXPECT_TRUE(back.same_tables(r)) << text;
        EXPECT_EQ(back.label(), r.label());
        EXPECT_EQ(save_cayley_json(back), saved) << text;
    }
}

TEST(CayleyJson, FixtureMatchesEmbeddedF4) {
    FiniteRing file = load_cayley_file(std::string(GNCRING_FIXTURES) + "/f4.json");
    FiniteRing embedded = load_cayley_json(f4_cayley_json());
    EXPECT_TRUE(file.same_tables(embedded));
    EXPECT_EQ(file.size(), 4u);
    EXPECT_TRUE(ring_predicate(file, Property::field).holds);
}

TEST(CayleyJson, F4MultiplicationIsPolynomialArithmetic) {
    // a0 + a1 x at index 2*a0 + a1, x^2 = x + 1
    FiniteRing f4 = load_cayley_json(f4_cayley_json());
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b) {
            const unsigned a0 = a >> 1, a1 = a & 1, b0 = b >> 1, b1 = b & 1;
            const unsigned c2 = a1 & b1;
            const unsigned c0 = ((a0 & b0) ^ c2), c1 = ((a0 & b1) ^ (a1 & b0) ^ c2);
            EXPECT_EQ(f4.mul(a, b), Index(2 * c0 + c1));
            EXPECT_EQ(f4.add(a, b), a ^ b);
        }
}

TEST(CayleyJson, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "gncring_roundtrip.json";
    FiniteRing r = build_ring("S(3,Zn(2))");
    save_cayley_file(r, path.string());
    EXPECT_TRUE(load_cayley_file(path.string()).same_tables(r));
    std::filesystem::remove(path);
    EXPECT_THROW(load_cayley_file(path.string()), input_error);
}

TEST(CayleyJson, RejectsInvalidTables) {
    nlohmann::json broken = z2_json();
    broken["mul"][1][1] = 0;
    EXPECT_NE(rejection(broken).find("violates"), std::string::npos);

    nlohmann::json nonassoc = nlohmann::json::parse(
        R"({"label":"x","size":3,"zero":0,"one":1,"add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,2]]})");
    EXPECT_NE(rejection(nonassoc).find("violates"), std::string::npos);
}

TEST(CayleyJson, RejectsMalformedDocuments) {
    EXPECT_THROW(load_cayley_json("{not json"), input_error);
    for (const char* key : {"label", "size", "zero", "one", "add", "mul"}) {
        nlohmann::json j = z2_json();
        j.erase(key);
        EXPECT_NE(rejection(j).find(key), std::string::npos) << key;
    }
    nlohmann::json short_row = z2_json();
    short_row["add"][1] = {1};
    EXPECT_FALSE(rejection(short_row).empty());
    nlohmann::json out_of_range = z2_json();
    out_of_range["add"][0][0] = 5;
    EXPECT_FALSE(rejection(out_of_range).empty());
    nlohmann::json negative = z2_json();
    negative["one"] = -1;
    EXPECT_FALSE(rejection(negative).empty());
    nlohmann::json empty = z2_json();
    empty["size"] = 0;
    EXPECT_FALSE(rejection(empty).empty());
}
