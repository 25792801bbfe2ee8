#include "mvl/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvl {

std::optional<TemplateWitness> check_template(QGateKind kind,
                                              const BTemplate& t) {
    if (arity(kind) == 1) {
        for (int a = 0; a < 4; ++a) {
            Qudit qa(a);
            Qudit expected = eval_qgate(kind, qa);
            BitPair got = eval_template(t, qudit_to_bits(qa));
            if (bits_to_qudit(got) != expected)
                return TemplateWitness{qa, std::nullopt, expected, got};
        }
        return std::nullopt;
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            Qudit qa(a), qb(b);
            Qudit expected = eval_qgate(kind, qa, qb);
            BitPair got =
                eval_template(t, qudit_to_bits(qa), qudit_to_bits(qb));
            if (bits_to_qudit(got) != expected)
                return TemplateWitness{qa, qb, expected, got};
        }
    }
    return std::nullopt;
}

std::vector<TemplateCheck> check_gate_templates() {
    std::vector<TemplateCheck> checks;
    for (QGateKind kind : all_qgate_kinds) {
        auto witness = check_template(kind, lower_gate(kind));
        checks.push_back({kind, !witness.has_value(), witness});
    }
    return checks;
}

EquivalenceReport check_equivalence(const QNetlist& n, int input_cap) {
    if (static_cast<int>(n.inputs.size()) > input_cap)
        throw TooManyInputs("netlist has " + std::to_string(n.inputs.size()) +
                            " inputs, cap is " + std::to_string(input_cap));

    EquivalenceReport report;
    report.circuit = n.name;

    auto lowered = lower_netlist(n);
    if (!lowered.netlist)
        throw Error("cannot lower invalid netlist " + n.name + ": " +
                    (lowered.errors.empty()
                         ? std::string("unknown error")
                         : format(lowered.errors.front())));

    std::vector<int> digits(n.inputs.size(), 0);
    report.equivalent = true;
    for (;;) {
        QAssignment qa;
        BAssignment ba;
        for (size_t i = 0; i < n.inputs.size(); ++i) {
            Qudit v(digits[i]);
            qa.emplace(n.inputs[i], v);
            BitPair bits = qudit_to_bits(v);
            ba.emplace(n.inputs[i] + ".1", bits.msb);
            ba.emplace(n.inputs[i] + ".0", bits.lsb);
        }
        auto q_outs = sim_q(n, qa);
        auto b_outs = sim_b(*lowered.netlist, ba);

        std::map<std::string, Qudit> decoded;
        for (const auto& [name, value] : q_outs) {
            (void)value;
            decoded.emplace(name, bits_to_qudit({b_outs.at(name + ".1"),
                                                 b_outs.at(name + ".0")}));
        }
        ++report.assignments_checked;
        if (decoded != q_outs && report.equivalent) {
            report.equivalent = false;
            report.mismatch =
                EquivalenceReport::Mismatch{qa, q_outs, decoded};
        }

        size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == 4)
            digits[--i] = 0;
        if (i == 0)
            break;
    }
    return report;
}

namespace {

// splitmix64: the reference constants, so seeds reproduce anywhere.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

} // namespace

QNetlist random_netlist(std::uint64_t seed, int n_inputs, int n_gates) {
    n_inputs = std::clamp(n_inputs, 1, 4);
    n_gates = std::clamp(n_gates, 1, 32);
    SplitMix64 rng{seed};

    QNetlist n;
    n.name = "fuzz" + std::to_string(seed);
    for (int i = 0; i < n_inputs; ++i)
        n.inputs.push_back("in" + std::to_string(i));
    for (int v = 0; v < 4; ++v)
        n.constants.push_back({"c" + std::to_string(v), v});

    std::vector<std::string> signals = n.inputs;
    for (const auto& c : n.constants)
        signals.push_back(c.name);

    for (int i = 0; i < n_gates; ++i) {
        QGateKind kind = all_qgate_kinds[rng.below(all_qgate_kinds.size())];
        std::vector<std::string> sources;
        for (int k = 0; k < arity(kind); ++k)
            sources.push_back(signals[rng.below(signals.size())]);
        std::string id = "g" + std::to_string(i);
        n.gates.push_back({id, kind, std::move(sources), std::nullopt});
        signals.push_back(id);
    }

    // Tap every sink gate; the last gate is always one.
    std::set<std::string> consumed;
    for (const auto& g : n.gates)
        for (const auto& src : g.inputs)
            consumed.insert(src);
    int out_index = 0;
    for (const auto& g : n.gates)
        if (!consumed.count(g.id))
            n.outputs.push_back(
                {"out" + std::to_string(out_index++), g.id});

    auto slotted = assign_slots(n);
    return *slotted.netlist;
}

std::string EquivalenceReport::to_text() const {
    std::ostringstream out;
    out << circuit << ": "
        << (equivalent ? "equivalent" : "MISMATCH") << " ("
        << assignments_checked << " assignments checked)";
    if (mismatch) {
        out << "\n  at";
        for (const auto& [name, value] : mismatch->assignment)
            out << " " << name << "=" << value.value();
        out << "\n  quaternary:";
        for (const auto& [name, value] : mismatch->quaternary)
            out << " " << name << "=" << value.value();
        out << "\n  decoded binary:";
        for (const auto& [name, value] : mismatch->decoded_binary)
            out << " " << name << "=" << value.value();
    }
    return out.str();
}

std::string EquivalenceReport::csv_row() const {
    std::ostringstream out;
    out << circuit << "," << (equivalent ? "equivalent" : "mismatch") << ",";
    if (mismatch) {
        bool first = true;
        for (const auto& [name, value] : mismatch->assignment) {
            out << (first ? "" : " ") << name << "=" << value.value();
            first = false;
        }
    }
    return out.str();
}

} // namespace mvl
