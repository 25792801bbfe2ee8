#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvl/lower.hpp"
#include "mvl/sim.hpp"

namespace mvl {

/// A concrete operand combination where a replacement template and the
/// gate it replaces disagree.
struct TemplateWitness {
    Qudit a;
    std::optional<Qudit> b;
    Qudit expected; // the gate's own result
    BitPair got;    // the template's output pair
};

/// Exhaustively compares one template against the gate semantics (16
/// operand pairs for dyadic kinds, 4 for unary). Empty result = sound.
std::optional<TemplateWitness> check_template(QGateKind kind,
                                              const BTemplate& t);

struct TemplateCheck {
    QGateKind kind;
    bool pass;
    std::optional<TemplateWitness> witness;
};

/// Runs check_template on the replacement library, one row per kind.
std::vector<TemplateCheck> check_gate_templates();

struct EquivalenceReport {
    std::string circuit;
    long assignments_checked = 0;
    bool equivalent = false;

    struct Mismatch {
        QAssignment assignment;
        std::map<std::string, Qudit> quaternary;      // sim_q outputs
        std::map<std::string, Qudit> decoded_binary;  // decoded sim_b outputs
    };
    std::optional<Mismatch> mismatch;

    std::string to_text() const;
    std::string csv_row() const; // circuit,status,witness
};

/// Lowers the netlist and co-simulates both versions over every input
/// assignment, decoding the binary output pairs back to qudits.
/// Throws TooManyInputs past the cap.
EquivalenceReport check_equivalence(const QNetlist& n, int input_cap = 6);

/// Deterministic pseudo-random, always-valid netlist: n_inputs free
/// inputs (clamped to 1..4), the four constants, n_gates gates (clamped
/// to 1..32) with uniformly chosen kinds and earlier-declared sources,
/// and one output per sink gate. The same seed always reproduces the
/// same netlist.
QNetlist random_netlist(std::uint64_t seed, int n_inputs, int n_gates);

} // namespace mvl
