#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mvl/netlist.hpp"

namespace mvl {

using QAssignment = std::map<std::string, Qudit>;
using BAssignment = std::map<std::string, bool>;

/// Evaluates a valid, fully-slotted netlist on one total input
/// assignment. Gates run in ascending slot order (declaration order
/// within a slot); the result maps each declared output to its value.
/// Throws IncompleteAssignment when an input is unbound.
std::map<std::string, Qudit> sim_q(const QNetlist& n, const QAssignment& a);
std::map<std::string, bool> sim_b(const BNetlist& n, const BAssignment& a);

/// Exhaustive input/output enumeration with a fixed row order: rows are
/// odometer-ordered with the first declared input most significant and
/// values ascending.
struct TruthTable {
    enum class Radix { Binary = 2, Quaternary = 4 };

    Radix radix = Radix::Quaternary;
    std::vector<std::string> input_names;
    std::vector<std::string> output_names;
    std::vector<std::vector<int>> rows; // input values then output values

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

    /// header = input names then output names, one row per assignment.
    std::string to_csv() const;

    /// Inverse of to_csv. The input-column count is inferred from the
    /// row count (radix^n rows) and the odometer pattern is verified;
    /// anything inconsistent throws MalformedTable.
    static TruthTable from_csv(std::string_view text, Radix radix);

    /// Aligned, human-readable rendering.
    std::string to_text() const;
};

/// All 4^n rows of a quaternary netlist (throws TooManyInputs past the
/// cap; the default keeps exhaustive runs instant).
TruthTable truth_table_q(const QNetlist& n, int input_cap = 6);

/// All 2^m rows of a binary netlist.
TruthTable truth_table_b(const BNetlist& n, int input_cap = 12);

} // namespace mvl
