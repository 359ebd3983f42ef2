#include <gtest/gtest.h>

#include "gncring/gncring.hpp"

using namespace gncring;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_ring_expr(text);
    } catch (const parse_error& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return std::string::npos;
}

std::string error_message(const std::string& text) {
    try {
        parse_ring_expr(text);
    } catch (const parse_error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Parse, ConstructorNodes) {
    RingExpr m = parse_ring_expr("M(2,Zn(2))");
    EXPECT_EQ(m.kind, ExprKind::matrix);
    EXPECT_EQ(m.ints, std::vector<std::uint64_t>{2});
    ASSERT_EQ(m.args.size(), 1u);
    EXPECT_EQ(m.args[0].kind, ExprKind::zn);

    RingExpr rg = parse_ring_expr("RG(Zn(3),C(2))");
    EXPECT_EQ(rg.kind, ExprKind::rg);
    EXPECT_EQ(rg.group, std::vector<std::uint64_t>{2});

    RingExpr ms = parse_ring_expr("Ms(2,Zn(4),2)");
    EXPECT_EQ(ms.kind, ExprKind::ms);
    EXPECT_EQ(ms.ints, (std::vector<std::uint64_t>{2, 2}));

    RingExpr tt = parse_ring_expr("TT(Zn(4),Zn(2),regular)");
    EXPECT_EQ(tt.mod, "regular");

    RingExpr v = parse_ring_expr("RG(Zn(2),C(2)xC(2)xC(3))");
    EXPECT_EQ(v.group, (std::vector<std::uint64_t>{2, 2, 3}));

    RingExpr p = parse_ring_expr("Prod(Zn(2),Zn(3),Zn(5))");
    EXPECT_EQ(p.args.size(), 3u);

    RingExpr named = parse_ring_expr("M(2,F4)");
    EXPECT_EQ(named.args[0].kind, ExprKind::named);
    EXPECT_EQ(named.args[0].name, "F4");
}

TEST(Parse, WhitespaceInsensitive) {
    EXPECT_EQ(parse_ring_expr("  RG ( Zn( 3 ) , C(2) x C( 2 ) )  "), parse_ring_expr("RG(Zn(3),C(2)xC(2))"));
    EXPECT_EQ(to_string(parse_ring_expr("Ms( 2 , Zn(4) , 2 )")), "Ms(2,Zn(4),2)");
}

TEST(Parse, PrintParseRoundTripOnCatalog) {
    for (const auto& text : default_catalog()) {
        RingExpr e = parse_ring_expr(text);
        EXPECT_EQ(to_string(e), text);
        EXPECT_EQ(parse_ring_expr(to_string(e)), e);
    }
    for (const char* text : {"TT(Zn(2),Zn(3),zero)", "Anm(Zn(2),3,2)", "RG(Prod(Zn(2),Zn(3)),C(2)xC(4))",
                             "Triv(S(3,Zn(2)))", "M(2,F4)"})
        EXPECT_EQ(to_string(parse_ring_expr(text)), text);
}

TEST(Parse, LabelsMatchCanonicalForm) {
    for (const char* text : {"M(2,Zn(2))", "T(3,Zn(4))", "S(2,Zn(3))", "Triv(Zn(4))", "Rn(Zn(2),3)", "Anm(Zn(2),2,2)",
                             "Bnm(Zn(3),2,2)", "Ks(Zn(4),2)", "Ms(2,Zn(4),2)", "TT(Zn(4),Zn(2),regular)",
                             "RG(Zn(3),C(2)xC(2))", "Prod(Zn(2),Zn(9))"})
        EXPECT_EQ(build_ring(text).label(), text);
}

TEST(ParseErrors, SyntaxPositions) {
    EXPECT_EQ(error_position("Zn(4"), 4u);
    EXPECT_EQ(error_position("Zn(4))"), 5u);
    EXPECT_EQ(error_position("M(2,,Zn(2))"), 4u);
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("Zn(x)"), 3u);
    EXPECT_EQ(error_position("RG(Zn(2),C(2)xD(2))"), 14u);
    EXPECT_NE(error_message("Zn(4").find("position 4"), std::string::npos);
}

TEST(ParseErrors, ArityAndTypesNameTheConstructor) {
    EXPECT_NE(error_message("M(2)").find("M takes 2 arguments, got 1"), std::string::npos);
    EXPECT_NE(error_message("Zn(2,3)").find("Zn takes 1 argument, got 2"), std::string::npos);
    EXPECT_NE(error_message("M(Zn(2),2)").find("M: argument 1 must be an integer"), std::string::npos);
    EXPECT_NE(error_message("RG(Zn(2),3)").find("RG: argument 2 must be a group"), std::string::npos);
    EXPECT_NE(error_message("TT(Zn(2),Zn(2),left)").find("'regular' or 'zero'"), std::string::npos);
    EXPECT_NE(error_message("Prod()").find("Prod needs at least one argument"), std::string::npos);
    EXPECT_NE(error_message("Foo(2)").find("unknown constructor 'Foo'"), std::string::npos);
    EXPECT_EQ(error_position("M(2,Zn(2),  7)"), 0u);
    EXPECT_EQ(error_position("Ks(Zn(2), C(2))"), 10u);
}

TEST(ParseErrors, AreInputErrors) {
    EXPECT_THROW(parse_ring_expr("Zn("), input_error);
    EXPECT_THROW(parse_ring_expr("Zn(99999999999999999999999)"), parse_error);
}

TEST(BuildRing, DeferredArgumentErrors) {
    EXPECT_THROW(build_ring("Ks(Zn(4),7)"), input_error);      // s out of range
    EXPECT_THROW(build_ring("Zn(0)"), input_error);
    EXPECT_THROW(build_ring("M(2,G4)"), input_error);          // unknown named ring
    EXPECT_THROW(build_ring("RG(Zn(2),C(0))"), input_error);
    EXPECT_THROW(build_ring("Rn(Zn(2),1)"), input_error);
    EXPECT_THROW(build_ring("M(0,Zn(2))"), input_error);
}

TEST(BuildRing, NamedRingsResolve) {
    NamedRings named = default_named_rings();
    FiniteRing m = build_ring("M(2,F4)", {}, named);
    EXPECT_EQ(m.size(), 256u);
    named.emplace("Z5", build_zn(5));
    EXPECT_TRUE(build_ring("Z5", {}, named).same_tables(build_zn(5)));
}
