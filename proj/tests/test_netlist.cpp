#include <doctest.h>

#include <algorithm>

#include "mvl/examples.hpp"
#include "mvl/netlist.hpp"
#include "mvl/verify.hpp"

using namespace mvl;

namespace {

bool has_error(const std::vector<ValidationError>& errors,
               ValidationError::Kind kind) {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const ValidationError& e) {
                           return e.kind == kind;
                       });
}

} // namespace

TEST_CASE("parses the decoder example") {
    auto parsed = parse_qnetlist(example_source("decoder"));
    REQUIRE(parsed.ok());
    const QNetlist& n = *parsed.netlist;
    CHECK(n.name == "decoder");
    CHECK(n.inputs.size() == 1);
    CHECK(n.constants.size() == 4);
    CHECK(n.gates.size() == 4);
    CHECK(n.outputs.size() == 4);
    for (const auto& g : n.gates) {
        CHECK(g.kind == QGateKind::Eq);
        CHECK(g.slot == 2);
    }
}

TEST_CASE("passthrough wire is a valid circuit") {
    auto parsed = parse_qnetlist("circuit pass\ninput A\noutput Y = A\n");
    REQUIRE(parsed.ok());
    CHECK(parsed->gates.empty());
    CHECK(validate(*parsed.netlist).empty());
}

TEST_CASE("comments and blank lines are ignored") {
    auto parsed = parse_qnetlist("# a comment\n"
                                 "circuit c # trailing comment\n"
                                 "\n"
                                 "input A\n"
                                 "gate g = NOT(A)  # invert\n"
                                 "output Y = g\n");
    REQUIRE(parsed.ok());
    CHECK(parsed->gates.size() == 1);
    CHECK(parsed->gates[0].slot == 2);
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_qnetlist("circuit c\ninput A\ngarbage here\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse_qnetlist(""), SyntaxError);
    CHECK_THROWS_AS(parse_qnetlist("input A\n"), SyntaxError);
    CHECK_THROWS_AS(parse_qnetlist("circuit c\ngate g = AND2(A, B)\n"),
                    SyntaxError); // binary kind in a quaternary netlist
    CHECK_THROWS_AS(parse_qnetlist("circuit c\nconst K = x\n"), SyntaxError);
}

TEST_CASE("undeclared signals are reported") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input A\n"
                                 "gate g = AND(A, Z)\n"
                                 "output Y = g\n");
    CHECK_FALSE(parsed.ok());
    CHECK(has_error(parsed.errors, ValidationError::Kind::UnknownSignal));
    CHECK(parsed.errors.front().line == 3);
}

TEST_CASE("duplicate names are reported") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input A\n"
                                 "input A\n"
                                 "output Y = A\n");
    CHECK_FALSE(parsed.ok());
    CHECK(has_error(parsed.errors, ValidationError::Kind::DuplicateName));
}

TEST_CASE("arity mismatches are reported") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input A\n"
                                 "gate g = NOT(A, A)\n"
                                 "output Y = g\n");
    CHECK_FALSE(parsed.ok());
    CHECK(has_error(parsed.errors, ValidationError::Kind::ArityMismatch));
}

TEST_CASE("out-of-range constants are reported") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "const K = 4\n"
                                 "output Y = K\n");
    CHECK_FALSE(parsed.ok());
    CHECK(has_error(parsed.errors, ValidationError::Kind::ValueOutOfRange));

    // Binary netlists cap constants at 1.
    auto binary = parse_bnetlist("circuit c\n"
                                 "const K = 2\n"
                                 "output Y = K\n");
    CHECK_FALSE(binary.ok());
    CHECK(has_error(binary.errors, ValidationError::Kind::ValueOutOfRange));
}

TEST_CASE("slot rules") {
    SUBCASE("a gate cannot read a later slot") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate g1 = NOT(g2) @ 2\n"
                                     "gate g2 = NOT(A) @ 4\n"
                                     "output Y = g1\n");
        CHECK_FALSE(parsed.ok());
        CHECK(has_error(parsed.errors, ValidationError::Kind::SlotViolation));
    }
    SUBCASE("odd slots hold wiring only") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate g = NOT(A) @ 3\n"
                                     "output Y = g\n");
        CHECK_FALSE(parsed.ok());
        CHECK(has_error(parsed.errors, ValidationError::Kind::SlotViolation));
    }
    SUBCASE("slot 0 is reserved for inputs and constants") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate g = NOT(A) @ 0\n"
                                     "output Y = g\n");
        CHECK_FALSE(parsed.ok());
        CHECK(has_error(parsed.errors, ValidationError::Kind::SlotViolation));
    }
}

TEST_CASE("slot assignment by levelization") {
    SUBCASE("one level") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input S\n"
                                     "const C0 = 0\n"
                                     "gate g = EQ(S, C0)\n"
                                     "output Y = g\n");
        REQUIRE(parsed.ok());
        CHECK(parsed->gates[0].slot == 2);
    }
    SUBCASE("two levels") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\ninput B\ninput C\ninput D\n"
                                     "gate g1 = AND(A, B)\n"
                                     "gate g2 = AND(C, D)\n"
                                     "gate g3 = OR(g1, g2)\n"
                                     "output Y = g3\n");
        REQUIRE(parsed.ok());
        CHECK(parsed->gates[0].slot == 2);
        CHECK(parsed->gates[1].slot == 2);
        CHECK(parsed->gates[2].slot == 4);
    }
    SUBCASE("chain of three") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate g1 = NOT(A)\n"
                                     "gate g2 = NOT(g1)\n"
                                     "gate g3 = NOT(g2)\n"
                                     "output Y = g3\n");
        REQUIRE(parsed.ok());
        CHECK(parsed->gates[0].slot == 2);
        CHECK(parsed->gates[1].slot == 4);
        CHECK(parsed->gates[2].slot == 6);
    }
    SUBCASE("declaration order does not constrain levels") {
        auto parsed = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate late = NOT(early)\n"
                                     "gate early = NOT(A)\n"
                                     "output Y = late\n");
        REQUIRE(parsed.ok());
        CHECK(parsed->gates[0].slot == 4);
        CHECK(parsed->gates[1].slot == 2);
    }
}

TEST_CASE("explicit consistent slots are preserved") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input A\n"
                                 "gate g1 = NOT(A) @ 4\n" // skips slot 2
                                 "gate g2 = NOT(g1)\n"
                                 "output Y = g2\n");
    REQUIRE(parsed.ok());
    CHECK(parsed->gates[0].slot == 4);
    CHECK(parsed->gates[1].slot == 6);
}

TEST_CASE("assign_slots is idempotent") {
    QNetlist n = example_netlist("mux4");
    auto once = assign_slots(n);
    REQUIRE(once.ok());
    auto twice = assign_slots(*once.netlist);
    REQUIRE(twice.ok());
    CHECK(*once.netlist == *twice.netlist);
}

TEST_CASE("validate(assign_slots(n)) is clean for acyclic netlists") {
    for (int seed = 1; seed <= 25; ++seed) {
        QNetlist n = random_netlist(seed, 3, 12);
        for (auto& g : n.gates)
            g.slot.reset();
        auto slotted = assign_slots(n);
        REQUIRE(slotted.ok());
        CHECK(validate(*slotted.netlist).empty());
    }
}

TEST_CASE("combinational cycles are rejected") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input A\n"
                                 "gate g1 = AND(A, g2)\n"
                                 "gate g2 = NOT(g1)\n"
                                 "output Y = g2\n");
    CHECK_FALSE(parsed.ok());
    CHECK(has_error(parsed.errors,
                    ValidationError::Kind::CombinationalCycle));

    auto self_loop = parse_qnetlist("circuit c\n"
                                    "input A\n"
                                    "gate g = NOT(g)\n"
                                    "output Y = g\n");
    CHECK_FALSE(self_loop.ok());
    CHECK(has_error(self_loop.errors,
                    ValidationError::Kind::CombinationalCycle));
}

TEST_CASE("serialize then parse is identity") {
    for (auto name : example_names()) {
        QNetlist n = example_netlist(name);
        std::string text = serialize_netlist(n);
        auto back = parse_qnetlist(text);
        REQUIRE(back.ok());
        CHECK(*back.netlist == n);
        // Byte-identical fixpoint.
        CHECK(serialize_netlist(*back.netlist) == text);
    }
}

TEST_CASE("round trip drops comments but keeps semantics and order") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "input B\n"
                                 "input A\n"
                                 "gate z = AND(A, B) # first declared\n"
                                 "gate a = OR(A, z)\n"
                                 "output Y = a\n");
    REQUIRE(parsed.ok());
    std::string text = serialize_netlist(*parsed.netlist);
    CHECK(text.find('#') == std::string::npos);
    // Declaration order preserved: inputs B then A, gates z then a.
    CHECK(text.find("input B") < text.find("input A"));
    CHECK(text.find("gate z") < text.find("gate a"));
    auto back = parse_qnetlist(text);
    REQUIRE(back.ok());
    CHECK(*back.netlist == *parsed.netlist);
}

TEST_CASE("fuzzed netlists round-trip") {
    for (int seed = 1; seed <= 50; ++seed) {
        QNetlist n = random_netlist(seed, 1 + seed % 4, 1 + seed % 16);
        auto back = parse_qnetlist(serialize_netlist(n));
        REQUIRE(back.ok());
        CHECK(*back.netlist == n);
    }
}

TEST_CASE("binary dialect allows same-slot chains in declaration order") {
    auto ok = parse_bnetlist("circuit c\n"
                             "input A\n"
                             "gate g1 = NOT(A) @ 2\n"
                             "gate g2 = NOT(g1) @ 2\n"
                             "output Y = g2\n");
    CHECK(ok.ok());

    // The chain must still respect declaration order.
    auto bad = parse_bnetlist("circuit c\n"
                              "input A\n"
                              "gate g1 = NOT(g2) @ 2\n"
                              "gate g2 = NOT(A) @ 2\n"
                              "output Y = g1\n");
    CHECK_FALSE(bad.ok());
    CHECK(has_error(bad.errors, ValidationError::Kind::SlotViolation));

    // Quaternary netlists never share slots along a wire.
    auto quaternary = parse_qnetlist("circuit c\n"
                                     "input A\n"
                                     "gate g1 = NOT(A) @ 2\n"
                                     "gate g2 = NOT(g1) @ 2\n"
                                     "output Y = g2\n");
    CHECK_FALSE(quaternary.ok());
    CHECK(has_error(quaternary.errors,
                    ValidationError::Kind::SlotViolation));
}

TEST_CASE("validation errors format with line and kind") {
    auto parsed = parse_qnetlist("circuit c\n"
                                 "const K = 7\n"
                                 "output Y = K\n");
    REQUIRE_FALSE(parsed.ok());
    std::string msg = format(parsed.errors.front());
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("value-out-of-range") != std::string::npos);
}
