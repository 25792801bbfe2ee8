#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvl/expr.hpp"

namespace mvl {

struct Counterexample {
    Env assignment;
    Qudit lhs_value;
    Qudit rhs_value;
};

/// Exhaustively compares lhs and rhs over all 4^k assignments to the
/// union of their variables (k capped, default 4). Returns the
/// lexicographically first mismatch, or nothing if the identity holds.
/// Enumeration is odometer-style: variables sorted by name, first
/// variable most significant, values ascending — so results are
/// deterministic. Throws TooManyVariables past the cap.
std::optional<Counterexample> verify_identity(const ExprPtr& lhs,
                                              const ExprPtr& rhs,
                                              int var_cap = 4);

enum class VarPredicate { Symmetric, Asymmetric };

std::string_view to_string(VarPredicate p);

/// Result of checking a conditional identity: the equation must hold on
/// every assignment satisfying the predicate on `var`, and must fail on
/// at least one assignment violating it (otherwise the condition would
/// be vacuous).
struct ConditionalReport {
    bool holds_under_condition = false;
    bool differs_outside_condition = false;
    std::optional<Counterexample> violation; // mismatch inside the condition

    bool conditional_law_holds() const {
        return holds_under_condition && differs_outside_condition;
    }
};

ConditionalReport verify_conditional(const ExprPtr& lhs, const ExprPtr& rhs,
                                     const std::string& var, VarPredicate pred,
                                     int var_cap = 4);

enum class LawStatus { Holds, FailsAsExpected, Violated };

std::string_view to_string(LawStatus s);

struct LawResult {
    std::string name;
    std::string locus; // the algebra's own numbering: axiom/property/theorem
    std::string lhs;
    std::string rhs;
    LawStatus expected;
    LawStatus observed;
    std::optional<Counterexample> counterexample;
    std::string note;

    bool matches() const { return expected == observed; }
};

struct LawReport {
    std::vector<LawResult> results;

    bool all_match() const;
    std::string to_text() const;
    std::string to_csv() const;
};

/// Machine-checks the registered catalog: the Huntington axioms, the ten
/// operator properties (including the conditional and impossible ones),
/// the eight theorems, and the inverter interchange identities. Laws
/// whose printed form is a known misprint are registered as
/// fails-as-expected alongside their corrected variants.
LawReport run_law_suite();

} // namespace mvl
