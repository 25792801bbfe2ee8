#include <doctest.h>

#include "mvl/expr.hpp"

using namespace mvl;

TEST_CASE("parses infix operators") {
    ExprPtr e = parse_expr("A + B");
    REQUIRE(e->tag() == Expr::Tag::Binary);
    CHECK(e->op() == QGateKind::Or);
    CHECK(e->left()->var_name() == "A");
    CHECK(e->right()->var_name() == "B");
}

TEST_CASE("parses function application") {
    ExprPtr e = parse_expr("NOT(A . B)");
    REQUIRE(e->tag() == Expr::Tag::Unary);
    CHECK(e->op() == QGateKind::Not);
    CHECK(e->operand()->op() == QGateKind::And);

    ExprPtr eq = parse_expr("EQ(A, 3)");
    REQUIRE(eq->tag() == Expr::Tag::Binary);
    CHECK(eq->op() == QGateKind::Eq);
    CHECK(eq->left()->var_name() == "A");
    CHECK(eq->right()->const_value() == Qudit(3));
}

TEST_CASE("and binds tighter than or") {
    ExprPtr e = parse_expr("A + B . C");
    REQUIRE(e->op() == QGateKind::Or);
    CHECK(e->right()->op() == QGateKind::And);

    ExprPtr f = parse_expr("(A + B) . C");
    CHECK(f->op() == QGateKind::And);
}

TEST_CASE("serialization is structure-preserving") {
    const char* sources[] = {
        "A + B . C",
        "(A + B) . C",
        "NOT(A + B)",
        "EQ(MAX(A, B), MIN(A, 2))",
        "A + (B + C)",
        "(A + B) + C",
        "A . (B . C)",
        "BITSWAP(INWARD(OUTWARD(X)))",
        "XOR(A, 1) + 0",
    };
    for (const char* src : sources) {
        CAPTURE(src);
        ExprPtr e = parse_expr(src);
        ExprPtr back = parse_expr(to_string(e));
        CHECK(structurally_equal(e, back));
        // Canonical text is a fixpoint.
        CHECK(to_string(back) == to_string(e));
    }
}

TEST_CASE("associativity is preserved through round trips") {
    ExprPtr left = parse_expr("(A + B) + C");
    ExprPtr right = parse_expr("A + (B + C)");
    CHECK_FALSE(structurally_equal(left, right));
    CHECK(structurally_equal(parse_expr(to_string(right)), right));
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_expr("A +"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(A + B"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("A B"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("NOT A"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("4"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("EQ(A)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
    try {
        parse_expr("A + $");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("unknown function names are rejected") {
    CHECK_THROWS_AS(parse_expr("NAND(A, B)"), UnknownOperator);
    CHECK_THROWS_AS(parse_expr("foo(A)"), UnknownOperator);
}

TEST_CASE("evaluation") {
    Env env{{"A", Qudit(2)}};
    CHECK(eval_expr(parse_expr("A + NOT(A)"), env) == Qudit(3));
    env["A"] = Qudit(1);
    CHECK(eval_expr(parse_expr("A . NOT(A)"), env) == Qudit(0));
    CHECK(eval_expr(parse_expr("BITSWAP(BITSWAP(A))"), env) == Qudit(1));
    CHECK(eval_expr(parse_expr("EQ(A, 1)"), env) == Qudit(3));
    CHECK(eval_expr(parse_expr("MAX(A, 3) . MIN(A, 2)"), env) == Qudit(1));
}

TEST_CASE("unbound variables are reported") {
    CHECK_THROWS_AS(eval_expr(parse_expr("A + B"), Env{{"A", Qudit(0)}}),
                    UnboundVariable);
}

TEST_CASE("variable collection is sorted and deduplicated") {
    auto vars = variables(parse_expr("Z + A . Z + EQ(B, A)"));
    CHECK(vars == std::vector<std::string>{"A", "B", "Z"});
    CHECK(variables(parse_expr("1 + 2")).empty());
}
