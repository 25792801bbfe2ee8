#include <doctest.h>

#include <set>

#include "mvl/laws.hpp"

using namespace mvl;

TEST_CASE("identities that hold return no counterexample") {
    CHECK_FALSE(verify_identity(parse_expr("NOT(A + B)"),
                                parse_expr("NOT(A) . NOT(B)")));
    CHECK_FALSE(verify_identity(parse_expr("BITSWAP(A + B)"),
                                parse_expr("BITSWAP(A) + BITSWAP(B)")));
}

TEST_CASE("inward distribution fails with the first counterexample") {
    // Independent oracle: enumerate the 16 pairs directly with the gate
    // evaluator and record the first mismatch.
    auto inward = [](Qudit q) { return eval_qgate(QGateKind::Inward, q); };
    auto orq = [](Qudit a, Qudit b) {
        return eval_qgate(QGateKind::Or, a, b);
    };
    std::optional<std::tuple<int, int, Qudit, Qudit>> expected;
    for (int a = 0; a < 4 && !expected; ++a) {
        for (int b = 0; b < 4 && !expected; ++b) {
            Qudit lhs = inward(orq(Qudit(a), Qudit(b)));
            Qudit rhs = orq(inward(Qudit(a)), inward(Qudit(b)));
            if (lhs != rhs)
                expected = {a, b, lhs, rhs};
        }
    }
    REQUIRE(expected.has_value());
    // Frozen: first mismatch is A=0, B=2 with 1 vs 3.
    CHECK(*expected == std::tuple{0, 2, Qudit(1), Qudit(3)});

    auto cex = verify_identity(parse_expr("INWARD(A + B)"),
                               parse_expr("INWARD(A) + INWARD(B)"));
    REQUIRE(cex.has_value());
    CHECK(cex->assignment.at("A") == Qudit(std::get<0>(*expected)));
    CHECK(cex->assignment.at("B") == Qudit(std::get<1>(*expected)));
    CHECK(cex->lhs_value == std::get<2>(*expected));
    CHECK(cex->rhs_value == std::get<3>(*expected));
}

TEST_CASE("counterexamples are deterministic") {
    auto once = verify_identity(parse_expr("A"), parse_expr("BITSWAP(A)"));
    auto twice = verify_identity(parse_expr("A"), parse_expr("BITSWAP(A)"));
    REQUIRE(once.has_value());
    REQUIRE(twice.has_value());
    CHECK(once->assignment == twice->assignment);
    CHECK(once->lhs_value == twice->lhs_value);
    // Lexicographically first: A=1 is the first value bitswap moves.
    CHECK(once->assignment.at("A") == Qudit(1));
}

TEST_CASE("variable cap") {
    auto big = parse_expr("A + B + C + D + E");
    CHECK_THROWS_AS(verify_identity(big, big), TooManyVariables);
    CHECK_FALSE(verify_identity(big, big, 5));
}

TEST_CASE("conditional properties") {
    auto rep = verify_conditional(parse_expr("INWARD(BITSWAP(A))"),
                                  parse_expr("BITSWAP(INWARD(A))"), "A",
                                  VarPredicate::Asymmetric);
    CHECK(rep.holds_under_condition);
    CHECK(rep.differs_outside_condition);
    CHECK(rep.conditional_law_holds());

    rep = verify_conditional(parse_expr("BITSWAP(OUTWARD(A))"),
                             parse_expr("OUTWARD(BITSWAP(A))"), "A",
                             VarPredicate::Symmetric);
    CHECK(rep.conditional_law_holds());

    // Wrong predicate: the same equation is not conditioned on symmetry.
    rep = verify_conditional(parse_expr("INWARD(BITSWAP(A))"),
                             parse_expr("BITSWAP(INWARD(A))"), "A",
                             VarPredicate::Symmetric);
    CHECK_FALSE(rep.holds_under_condition);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->assignment.at("A") == Qudit(0));
}

TEST_CASE("inverter composition differs for every operand") {
    auto inward = [](Qudit q) { return eval_qgate(QGateKind::Inward, q); };
    auto outward = [](Qudit q) { return eval_qgate(QGateKind::Outward, q); };
    for (int a = 0; a < 4; ++a)
        CHECK(inward(outward(Qudit(a))) != outward(inward(Qudit(a))));
}

TEST_CASE("consensus and elimination hold exhaustively") {
    CHECK_FALSE(
        verify_identity(parse_expr("A . B + NOT(A) . C + B . C"),
                        parse_expr("A . B + NOT(A) . C")));
    CHECK_FALSE(verify_identity(parse_expr("A + NOT(A) . B"),
                                parse_expr("A + B")));
    CHECK_FALSE(verify_identity(parse_expr("A . (NOT(A) + B)"),
                                parse_expr("A . B")));
}

TEST_CASE("law suite statuses all match expectations") {
    LawReport report = run_law_suite();
    CHECK(report.all_match());
    for (const auto& r : report.results) {
        CAPTURE(r.name);
        CHECK(r.expected == r.observed);
    }
}

TEST_CASE("every law appears exactly once") {
    LawReport report = run_law_suite();
    std::set<std::string> names;
    for (const auto& r : report.results)
        CHECK(names.insert(r.name).second);
    CHECK(names.size() == report.results.size());
}

TEST_CASE("printed-form discrepancies are surfaced, not silently passed") {
    LawReport report = run_law_suite();
    auto find = [&](std::string_view name) -> const LawResult& {
        for (const auto& r : report.results)
            if (r.name == name)
                return r;
        static LawResult missing;
        FAIL("law not registered: ", name);
        return missing;
    };

    const auto& printed_and = find("boundedness as printed (and, one)");
    CHECK(printed_and.observed == LawStatus::FailsAsExpected);
    REQUIRE(printed_and.counterexample.has_value());
    CHECK(printed_and.counterexample->assignment.at("A") == Qudit(2));
    CHECK_FALSE(printed_and.note.empty());

    const auto& interchange = find("interchange as printed (first form)");
    CHECK(interchange.observed == LawStatus::FailsAsExpected);
    REQUIRE(interchange.counterexample.has_value());
    // First failing triple: A=0, B=0, C=1 -> lhs 1, rhs 0.
    CHECK(interchange.counterexample->assignment.at("A") == Qudit(0));
    CHECK(interchange.counterexample->assignment.at("B") == Qudit(0));
    CHECK(interchange.counterexample->assignment.at("C") == Qudit(1));
    CHECK(interchange.counterexample->lhs_value == Qudit(1));
    CHECK(interchange.counterexample->rhs_value == Qudit(0));

    CHECK(find("interchange, corrected (first form)").observed ==
          LawStatus::Holds);
    CHECK(find("interchange (second form)").observed == LawStatus::Holds);
}

TEST_CASE("report renders every law") {
    LawReport report = run_law_suite();
    std::string text = report.to_text();
    std::string csv = report.to_csv();
    for (const auto& r : report.results) {
        CHECK(text.find(r.name) != std::string::npos);
        CHECK(csv.find(r.name + "," + r.locus) != std::string::npos);
    }
}
