#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "ringlab/expr.hpp"
#include "ringlab/table_io.hpp"

using namespace ringlab;

TEST_CASE("parsing the stock constructions") {
    auto e = parse_expr("Z3 x Bool(2)");
    REQUIRE(e->kind == RingExpr::Kind::Product);
    CHECK(e->left->kind == RingExpr::Kind::Zn);
    CHECK(e->left->n == 3);
    CHECK(e->right->kind == RingExpr::Kind::Bool);
    CHECK(e->right->n == 2);

    auto gr = parse_expr("GR(Z3, C3)");
    REQUIRE(gr->kind == RingExpr::Kind::GroupRing);
    CHECK(gr->left->n == 3);
    CHECK(gr->group->kind == GroupExpr::Kind::Cyclic);
    CHECK(gr->group->n == 3);

    auto t = parse_expr("T2(Z2)");
    CHECK(t->kind == RingExpr::Kind::Triangular);
    CHECK(t->n == 2);
    auto m = parse_expr("M2(Z2)");
    CHECK(m->kind == RingExpr::Kind::Matrix);

    auto s3 = parse_expr("GR(Z2, S3)");
    CHECK(s3->group->kind == GroupExpr::Kind::S3);
}

TEST_CASE("products associate to the left") {
    auto e = parse_expr("Z2 x Z3 x Z5");
    REQUIRE(e->kind == RingExpr::Kind::Product);
    CHECK(e->right->n == 5);
    REQUIRE(e->left->kind == RingExpr::Kind::Product);
    CHECK(e->left->left->n == 2);
    CHECK(e->left->right->n == 3);

    auto f = parse_expr("Z2 x (Z3 x Z5)");
    CHECK(f->left->kind == RingExpr::Kind::Zn);
    CHECK(f->right->kind == RingExpr::Kind::Product);
    CHECK(!equal(*e, *f));
}

TEST_CASE("whitespace is free, including none at all") {
    CHECK(equal(*parse_expr("Z3xBool(2)"), *parse_expr("  Z3   x  Bool( 2 )  ")));
    CHECK(equal(*parse_expr("GR(Z2,C2xC2)"), *parse_expr("GR( Z2 , C2 x C2 )")));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr("T2(Z2"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z"), ParseError);
    CHECK_THROWS_AS(parse_expr("Q5"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z3 )"), ParseError);
    CHECK_THROWS_AS(parse_expr("Bool(x)"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z999999999"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("GR(Z2)"), ParseError);
    try {
        parse_expr("T2(Z2");
    } catch (const ParseError& p) {
        CHECK(p.position == 5);  // end of input
    }
}

TEST_CASE("junk input raises parse errors, never crashes") {
    for (const char* junk :
         {"x", "xZ3", "Z3 x", "Z3 Z4", "((Z2)", "Bool", "Bool()", "Bool(2", "GR", "GR(,C2)",
          "GR(Z2,)", "T(Z2)", "M(Z2)", "C3", "S3", "Z3 x C3", "Table()", "Table(a",
          ",", ")", "Z-3", "T0(Z2)... ", "GR(Z2, Z3)", "Z3 xx Z3", "3"}) {
        CAPTURE(junk);
        CHECK_THROWS_AS(parse_expr(junk), ParseError);
    }
}

TEST_CASE("render and parse are inverse on canonical forms") {
    for (const char* text : {"Z4", "Bool(3)", "Z3 x Z3", "Z2 x Z3 x Z5", "T2(Z2)", "M2(Z3)",
                             "GR(Z3, C3)", "GR(Z2, C2 x C2)", "GR(Z2, S3)", "Z3 x (Z2 x Z2)"}) {
        auto ast = parse_expr(text);
        CHECK(render(*ast) == text);
        CHECK(equal(*parse_expr(render(*ast)), *ast));
    }
    // Non-canonical spellings normalize in one step.
    CHECK(render(*parse_expr("GR(Z3,C3)")) == "GR(Z3, C3)");
    CHECK(render(*parse_expr(" Z3x  Z3 ")) == "Z3 x Z3");
    // render . parse is idempotent.
    const std::string once = render(*parse_expr("GR(Z2,(C2xC2))"));
    CHECK(render(*parse_expr(once)) == once);
}

TEST_CASE("evaluation sizes and caps") {
    CHECK(build_from_text("Z3 x Z3").ring->order() == 9);
    CHECK(build_from_text("T2(Z2)").ring->order() == 8);
    CHECK(build_from_text("M2(Z2)").ring->order() == 16);
    CHECK(build_from_text("GR(Z2, C2 x C2)").ring->order() == 16);

    try {
        build_from_text("GR(Z3, C9)");
        FAIL("expected a cap error");
    } catch (const CapError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("GR(Z3, C9)") != std::string::npos);
        CHECK(msg.find("19683") != std::string::npos);
    }
    // The cap is adjustable in both directions.
    CHECK_THROWS_AS(build_from_text("Z100", EvalOptions{50, Exec::Serial}), CapError);
    CHECK(build_from_text("Z100", EvalOptions{100, Exec::Serial}).ring->order() == 100);
}

TEST_CASE("provenance is the canonical rendering") {
    CHECK(build_from_text("Z3x Bool(1)").ring->provenance() == "Z3 x Bool(1)");
    CHECK(build_from_text("GR(Z4,C2)").ring->provenance() == "GR(Z4, C2)");
}

TEST_CASE("group-ring factors are kept") {
    auto built = build_from_text("GR(Z3, C3)");
    REQUIRE(built.base);
    REQUIRE(built.group);
    REQUIRE(built.augmentation);
    CHECK(built.base->order() == 3);
    CHECK(built.group->order() == 3);
    CHECK(built.augmentation->source()->same_tables(*built.ring));
    CHECK(!build_from_text("Z6").base);
}

TEST_CASE("table expressions load from disk") {
    auto z6 = make_zn(6);
    const std::string path = "test_expr_io_z6.ring";
    write_file(path, save_ring(*z6));
    auto built = build_from_text("Table(" + path + ")");
    CHECK(built.ring->order() == 6);
    CHECK(built.ring->same_tables(*z6));
    std::remove(path.c_str());
    CHECK_THROWS(build_from_text("Table(no_such_file.ring)"));
}
