#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvl/qudit.hpp"

namespace mvl {

// Time-slotted combinational netlists. Slot 0 holds inputs and
// constants, gates sit at even slots >= 2, odd slots carry wiring only.
// Every gate reads signals from strictly smaller slots; the binary
// dialect additionally lets a gate read an earlier-declared gate in the
// same slot, which is how lowered multi-level gate replacements share
// the slot of the gate they replace.
//
// File format (.mvl quaternary / .bvl binary), one declaration per
// line, `#` starts a comment, identifiers are case-sensitive
// [A-Za-z_][A-Za-z0-9_.]*:
//
//   circuit <name>
//   input <name>
//   const <name> = <value>
//   gate <id> = <KIND>(<sig>[, <sig>]) [@ <even-slot>]
//   output <name> = <sig>
//
// Quaternary KINDs: AND OR NOT BITSWAP XOR INWARD OUTWARD EQ MAX MIN,
// const values 0-3. Binary KINDs: AND2 OR2 NOT XOR2 XNOR2, const
// values 0-1.

struct ValidationError {
    enum class Kind {
        UnknownSignal,
        DuplicateName,
        ArityMismatch,
        SlotViolation,
        ValueOutOfRange,
        CombinationalCycle,
    };

    Kind kind;
    std::string locus; // name of the offending element
    std::string message;
    int line = 0; // 1-based source line when known, else 0
};

std::string_view to_string(ValidationError::Kind kind);
std::string format(const ValidationError& error);

template <typename KindT>
struct GateInstance {
    std::string id;
    KindT kind;
    std::vector<std::string> inputs;
    std::optional<int> slot;

    friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

struct Constant {
    std::string name;
    int value;

    friend bool operator==(const Constant&, const Constant&) = default;
};

struct OutputPin {
    std::string name;
    std::string source;

    friend bool operator==(const OutputPin&, const OutputPin&) = default;
};

template <typename KindT>
struct BasicNetlist {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<Constant> constants;
    std::vector<GateInstance<KindT>> gates;
    std::vector<OutputPin> outputs;

    friend bool operator==(const BasicNetlist&, const BasicNetlist&) = default;
};

using QNetlist = BasicNetlist<QGateKind>;
using BNetlist = BasicNetlist<BGateKind>;

template <typename N>
struct NetlistResult {
    std::optional<N> netlist;
    std::vector<ValidationError> errors;

    bool ok() const { return netlist.has_value() && errors.empty(); }
    const N& operator*() const { return *netlist; }
    const N* operator->() const { return &*netlist; }
};

/// Parses netlist text. Malformed lines throw SyntaxError (position =
/// line number); semantic problems come back as the error list. On
/// success the netlist is validated and fully slotted.
NetlistResult<QNetlist> parse_qnetlist(std::string_view text);
NetlistResult<BNetlist> parse_bnetlist(std::string_view text);

/// Structural checks; empty result means the netlist honors every
/// invariant (unique names, resolvable references, arities, constant
/// ranges, slot discipline).
std::vector<ValidationError> validate(const QNetlist& n);
std::vector<ValidationError> validate(const BNetlist& n);

/// Fills in missing gate slots by levelization: a gate lands two slots
/// after its deepest source. Explicit slots are kept when consistent
/// (even, >= 2, after all sources) and reported as SlotViolation
/// otherwise; dependency cycles come back as CombinationalCycle.
/// Idempotent on fully-slotted consistent netlists.
NetlistResult<QNetlist> assign_slots(const QNetlist& n);
NetlistResult<BNetlist> assign_slots(const BNetlist& n);

/// Canonical text form; parsing it reproduces the netlist exactly,
/// and serializing again is byte-identical.
std::string serialize_netlist(const QNetlist& n);
std::string serialize_netlist(const BNetlist& n);

} // namespace mvl
