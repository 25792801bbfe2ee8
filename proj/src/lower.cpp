#include "mvl/lower.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mvl {

namespace {

using Port = BTemplate::Port;
using BK = BGateKind;

// The LSB networks for MAX and MIN are two-level sum-of-products forms
// obtained from the 16-row tables:
//   max_lsb = a1·a0 + b1·b0 + ~a1·b0 + ~b1·a0
//   min_lsb = a0·b0 + ~a1·a0·b1 + a1·~b1·b0
// Both are verified exhaustively against the gate semantics by the
// gate-level checks.
BTemplate make_template(QGateKind kind) {
    BTemplate t;
    t.kind = kind;
    auto a1 = Port::a1(), a0 = Port::a0(), b1 = Port::b1(), b0 = Port::b0();
    auto g = [](int i) { return Port::g(i); };
    switch (kind) {
    case QGateKind::And:
        t.gates = {{BK::And2, {a1, b1}}, {BK::And2, {a0, b0}}};
        t.out_msb = g(0);
        t.out_lsb = g(1);
        break;
    case QGateKind::Or:
        t.gates = {{BK::Or2, {a1, b1}}, {BK::Or2, {a0, b0}}};
        t.out_msb = g(0);
        t.out_lsb = g(1);
        break;
    case QGateKind::Xor:
        t.gates = {{BK::Xor2, {a1, b1}}, {BK::Xor2, {a0, b0}}};
        t.out_msb = g(0);
        t.out_lsb = g(1);
        break;
    case QGateKind::Not:
        t.gates = {{BK::Not, {a1}}, {BK::Not, {a0}}};
        t.out_msb = g(0);
        t.out_lsb = g(1);
        break;
    case QGateKind::Bitswap:
        // Pure wire crossing.
        t.out_msb = a0;
        t.out_lsb = a1;
        break;
    case QGateKind::Inward:
        t.gates = {{BK::Not, {a1}}};
        t.out_msb = g(0);
        t.out_lsb = a1;
        break;
    case QGateKind::Outward:
        t.gates = {{BK::Not, {a1}}};
        t.out_msb = g(0);
        t.out_lsb = g(0);
        break;
    case QGateKind::Eq:
        // Two XNORs and one AND; both output bits share the AND.
        t.gates = {{BK::Xnor2, {a1, b1}},
                   {BK::Xnor2, {a0, b0}},
                   {BK::And2, {g(0), g(1)}}};
        t.out_msb = g(2);
        t.out_lsb = g(2);
        break;
    case QGateKind::Max:
        t.gates = {
            {BK::Or2, {a1, b1}},     // 0: msb
            {BK::And2, {a1, a0}},    // 1
            {BK::And2, {b1, b0}},    // 2
            {BK::Not, {a1}},         // 3
            {BK::And2, {g(3), b0}},  // 4
            {BK::Not, {b1}},         // 5
            {BK::And2, {g(5), a0}},  // 6
            {BK::Or2, {g(1), g(2)}}, // 7
            {BK::Or2, {g(4), g(6)}}, // 8
            {BK::Or2, {g(7), g(8)}}, // 9: lsb
        };
        t.out_msb = g(0);
        t.out_lsb = g(9);
        break;
    case QGateKind::Min:
        t.gates = {
            {BK::And2, {a1, b1}},    // 0: msb
            {BK::And2, {a0, b0}},    // 1
            {BK::Not, {a1}},         // 2
            {BK::And2, {g(2), a0}},  // 3
            {BK::And2, {g(3), b1}},  // 4
            {BK::Not, {b1}},         // 5
            {BK::And2, {g(5), b0}},  // 6
            {BK::And2, {g(6), a1}},  // 7
            {BK::Or2, {g(1), g(4)}}, // 8
            {BK::Or2, {g(8), g(7)}}, // 9: lsb
        };
        t.out_msb = g(0);
        t.out_lsb = g(9);
        break;
    }
    return t;
}

bool port_is_operand(const Port& p) {
    return p.tag != Port::Tag::Gate;
}

} // namespace

BTemplate lower_gate(QGateKind kind) {
    return make_template(kind);
}

BitPair eval_template(const BTemplate& t, BitPair a, std::optional<BitPair> b) {
    if ((arity(t.kind) == 2) != b.has_value())
        throw ArityMismatch(std::string(to_string(t.kind)) +
                            " template operand count mismatch");
    std::vector<bool> wires(t.gates.size(), false);
    auto read = [&](const Port& p) -> bool {
        switch (p.tag) {
        case Port::Tag::AMsb: return a.msb;
        case Port::Tag::ALsb: return a.lsb;
        case Port::Tag::BMsb: return b ? b->msb : false;
        case Port::Tag::BLsb: return b ? b->lsb : false;
        case Port::Tag::Gate: return wires[p.gate];
        }
        return false;
    };
    for (size_t i = 0; i < t.gates.size(); ++i) {
        const auto& g = t.gates[i];
        wires[i] = g.inputs.size() == 1
                       ? eval_bgate(g.kind, read(g.inputs[0]))
                       : eval_bgate(g.kind, read(g.inputs[0]),
                                    read(g.inputs[1]));
    }
    return {read(t.out_msb), read(t.out_lsb)};
}

NetlistResult<BNetlist> lower_netlist(const QNetlist& n) {
    NetlistResult<BNetlist> result;
    auto slotted = assign_slots(n);
    if (!slotted.netlist) {
        result.errors = std::move(slotted.errors);
        return result;
    }
    auto errors = validate(*slotted.netlist);
    if (!errors.empty()) {
        result.errors = std::move(errors);
        return result;
    }
    const QNetlist& src = *slotted.netlist;

    BNetlist out;
    out.name = src.name;

    // Quaternary signal -> (msb wire, lsb wire).
    std::map<std::string, std::pair<std::string, std::string>> pair_of;

    for (const auto& in : src.inputs) {
        out.inputs.push_back(in + ".1");
        out.inputs.push_back(in + ".0");
        pair_of[in] = {in + ".1", in + ".0"};
    }
    for (const auto& c : src.constants) {
        BitPair bits = qudit_to_bits(Qudit(c.value));
        out.constants.push_back({c.name + ".1", bits.msb ? 1 : 0});
        out.constants.push_back({c.name + ".0", bits.lsb ? 1 : 0});
        pair_of[c.name] = {c.name + ".1", c.name + ".0"};
    }

    // Replace slot by slot, declaration order within a slot.
    std::vector<size_t> order(src.gates.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return src.gates[a].slot.value_or(0) < src.gates[b].slot.value_or(0);
    });

    for (size_t idx : order) {
        const auto& g = src.gates[idx];
        BTemplate t = lower_gate(g.kind);

        auto operand_wire = [&](const Port& p) -> std::string {
            const auto& a_pair = pair_of.at(g.inputs[0]);
            switch (p.tag) {
            case Port::Tag::AMsb: return a_pair.first;
            case Port::Tag::ALsb: return a_pair.second;
            case Port::Tag::BMsb: return pair_of.at(g.inputs[1]).first;
            case Port::Tag::BLsb: return pair_of.at(g.inputs[1]).second;
            case Port::Tag::Gate: break;
            }
            throw Error("not an operand port");
        };

        // Output-driving gates carry the pair names; the rest get
        // deterministic fresh names in template order.
        std::vector<std::string> names(t.gates.size());
        int fresh = 0;
        for (int i = 0; i < t.gate_count(); ++i) {
            bool drives_msb = t.out_msb == Port::g(i);
            bool drives_lsb = t.out_lsb == Port::g(i);
            if (drives_msb)
                names[i] = g.id + ".1";
            else if (drives_lsb)
                names[i] = g.id + ".0";
            else
                names[i] = g.id + "__t" + std::to_string(fresh++);
        }

        for (int i = 0; i < t.gate_count(); ++i) {
            std::vector<std::string> wires;
            for (const auto& p : t.gates[i].inputs)
                wires.push_back(port_is_operand(p) ? operand_wire(p)
                                                   : names[p.gate]);
            out.gates.push_back(
                {names[i], t.gates[i].kind, std::move(wires), g.slot});
        }

        auto resolve_out = [&](const Port& p) {
            return port_is_operand(p) ? operand_wire(p) : names[p.gate];
        };
        pair_of[g.id] = {resolve_out(t.out_msb), resolve_out(t.out_lsb)};
    }

    for (const auto& o : src.outputs) {
        const auto& pair = pair_of.at(o.source);
        out.outputs.push_back({o.name + ".1", pair.first});
        out.outputs.push_back({o.name + ".0", pair.second});
    }

    result.netlist = std::move(out);
    return result;
}

TruthTable pack_truth_table(const TruthTable& t) {
    if (t.radix != TruthTable::Radix::Quaternary)
        throw MalformedTable("pack_truth_table takes a quaternary table");

    // Re-verify completeness and row order so packed rows line up with
    // the binary odometer.
    size_t expect = 1;
    for (size_t i = 0; i < t.input_names.size(); ++i)
        expect *= 4;
    if (t.rows.size() != expect)
        throw MalformedTable("table has " + std::to_string(t.rows.size()) +
                             " rows, expected " + std::to_string(expect));
    std::vector<int> odometer(t.input_names.size(), 0);
    size_t width = t.input_names.size() + t.output_names.size();
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].size() != width)
            throw MalformedTable("row " + std::to_string(r + 1) +
                                 " has the wrong width");
        for (size_t i = 0; i < t.input_names.size(); ++i)
            if (t.rows[r][i] != odometer[i])
                throw MalformedTable("row " + std::to_string(r + 1) +
                                     " breaks odometer order");
        size_t i = odometer.size();
        while (i > 0 && ++odometer[i - 1] == 4)
            odometer[--i] = 0;
    }

    TruthTable packed;
    packed.radix = TruthTable::Radix::Binary;
    for (const auto& name : t.input_names) {
        packed.input_names.push_back(name + ".1");
        packed.input_names.push_back(name + ".0");
    }
    for (const auto& name : t.output_names) {
        packed.output_names.push_back(name + ".1");
        packed.output_names.push_back(name + ".0");
    }
    for (const auto& row : t.rows) {
        std::vector<int> bits;
        bits.reserve(row.size() * 2);
        for (int v : row) {
            if (v < 0 || v > 3)
                throw MalformedTable("value " + std::to_string(v) +
                                     " is not a qudit");
            bits.push_back((v >> 1) & 1);
            bits.push_back(v & 1);
        }
        packed.rows.push_back(std::move(bits));
    }
    return packed;
}

} // namespace mvl
