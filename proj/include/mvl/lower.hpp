#pragma once

#include <optional>
#include <vector>

#include "mvl/netlist.hpp"
#include "mvl/sim.hpp"

namespace mvl {

/// A fixed binary replacement for one quaternary gate: a list of binary
/// gates wired between the operand bit pairs (a.msb/a.lsb, b.msb/b.lsb)
/// and two output ports. Ports may tap operand bits directly, so a
/// template can be pure wiring (BITSWAP has no gates at all).
struct BTemplate {
    struct Port {
        enum class Tag { AMsb, ALsb, BMsb, BLsb, Gate };

        Tag tag = Tag::AMsb;
        int gate = -1; // index into gates when tag == Gate

        static Port a1() { return {Tag::AMsb, -1}; }
        static Port a0() { return {Tag::ALsb, -1}; }
        static Port b1() { return {Tag::BMsb, -1}; }
        static Port b0() { return {Tag::BLsb, -1}; }
        static Port g(int index) { return {Tag::Gate, index}; }

        friend bool operator==(const Port&, const Port&) = default;
    };

    struct TemplateGate {
        BGateKind kind;
        std::vector<Port> inputs; // refer only to operands or earlier gates
    };

    QGateKind kind;
    std::vector<TemplateGate> gates;
    Port out_msb;
    Port out_lsb;

    int gate_count() const { return static_cast<int>(gates.size()); }
};

/// The replacement library, one fixed template per gate kind.
BTemplate lower_gate(QGateKind kind);

/// Runs a template directly on operand bit pairs (no netlist involved);
/// this is the reference path the gate-level checks compare against.
BitPair eval_template(const BTemplate& t, BitPair a,
                      std::optional<BitPair> b = std::nullopt);

/// Replacement-based conversion: every signal becomes an MSB/LSB wire
/// pair (<name>.1 / <name>.0), every gate becomes its template
/// instantiated in the gate's slot, constants and inputs expand to bit
/// pairs, outputs to output pairs. Deterministic, including the fresh
/// names (<gate-id>__t<k>) of template-internal gates. Validation
/// problems in the source netlist are returned as errors.
NetlistResult<BNetlist> lower_netlist(const QNetlist& n);

/// Rewrites a quaternary truth table as a binary one: every column X
/// becomes adjacent columns X.1, X.0 (MSB first), values map to their
/// bit pairs, row order is preserved. The input must be complete and
/// odometer-ordered (MalformedTable otherwise).
TruthTable pack_truth_table(const TruthTable& t);

} // namespace mvl
