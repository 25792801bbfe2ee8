#include "mvl/render.hpp"

#include <map>
#include <sstream>

namespace mvl {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

template <typename KindT, typename Value>
std::string render_impl(const BasicNetlist<KindT>& n,
                        const RenderOptions& opts,
                        const std::map<std::string, Value>* wire_values,
                        std::string (*value_text)(const Value&)) {
    std::ostringstream out;
    out << "digraph " << quoted(n.name) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [fontsize=10];\n";

    auto slot_suffix = [&](int slot) {
        return opts.show_slots ? "\\n@" + std::to_string(slot) : std::string();
    };

    for (const auto& in : n.inputs)
        out << "  " << quoted(in) << " [shape=circle, label="
            << quoted(in + slot_suffix(0)) << "];\n";
    for (const auto& c : n.constants)
        out << "  " << quoted(c.name) << " [shape=doublecircle, label="
            << quoted(c.name + " = " + std::to_string(c.value) +
                      slot_suffix(0))
            << "];\n";
    for (const auto& g : n.gates)
        out << "  " << quoted(g.id) << " [shape=box, label="
            << quoted(g.id + "\\n" + std::string(to_string(g.kind)) +
                      slot_suffix(g.slot.value_or(0)))
            << "];\n";
    for (const auto& o : n.outputs)
        out << "  " << quoted(o.name) << " [shape=diamond, label="
            << quoted(o.name) << "];\n";

    auto edge = [&](const std::string& from, const std::string& to) {
        out << "  " << quoted(from) << " -> " << quoted(to);
        if (wire_values) {
            auto it = wire_values->find(from);
            if (it != wire_values->end())
                out << " [label=" << quoted(value_text(it->second)) << "]";
        }
        out << ";\n";
    };
    for (const auto& g : n.gates)
        for (const auto& src : g.inputs)
            edge(src, g.id);
    for (const auto& o : n.outputs)
        edge(o.source, o.name);

    // Slot strata become layout ranks.
    std::map<int, std::vector<std::string>> by_slot;
    for (const auto& in : n.inputs)
        by_slot[0].push_back(in);
    for (const auto& c : n.constants)
        by_slot[0].push_back(c.name);
    for (const auto& g : n.gates)
        by_slot[g.slot.value_or(0)].push_back(g.id);
    for (const auto& [slot, names] : by_slot) {
        (void)slot;
        out << "  { rank=same;";
        for (const auto& name : names)
            out << " " << quoted(name) << ";";
        out << " }\n";
    }
    if (!n.outputs.empty()) {
        out << "  { rank=same;";
        for (const auto& o : n.outputs)
            out << " " << quoted(o.name) << ";";
        out << " }\n";
    }
    out << "}\n";
    return out.str();
}

// Every signal's settled value, not just the outputs, so edges can be
// labeled at their source.
template <typename KindT, typename Value, typename EvalGate>
std::map<std::string, Value>
all_values(const BasicNetlist<KindT>& n,
           const std::map<std::string, Value>& assignment,
           EvalGate&& eval_gate, Value const_value(int)) {
    std::map<std::string, Value> values;
    for (const auto& in : n.inputs) {
        auto it = assignment.find(in);
        if (it == assignment.end())
            throw IncompleteAssignment("no value for input " + in);
        values.emplace(in, it->second);
    }
    for (const auto& c : n.constants)
        values.emplace(c.name, const_value(c.value));
    std::multimap<int, size_t> by_slot;
    for (size_t i = 0; i < n.gates.size(); ++i)
        by_slot.emplace(n.gates[i].slot.value_or(0), i);
    for (const auto& [slot, i] : by_slot) {
        (void)slot;
        const auto& g = n.gates[i];
        Value out = g.inputs.size() == 1
                        ? eval_gate(g.kind, values.at(g.inputs[0]),
                                    std::nullopt)
                        : eval_gate(g.kind, values.at(g.inputs[0]),
                                    values.at(g.inputs[1]));
        values.emplace(g.id, out);
    }
    return values;
}

std::string qudit_text(const Qudit& q) {
    return std::to_string(q.value());
}

std::string bit_text(const bool& b) {
    return b ? "1" : "0";
}

} // namespace

std::string render_dot(const QNetlist& n, const RenderOptions& opts) {
    if (opts.values) {
        auto values = all_values<QGateKind, Qudit>(
            n, *opts.values,
            [](QGateKind k, Qudit a, std::optional<Qudit> b) {
                return eval_qgate(k, a, b);
            },
            +[](int v) { return Qudit(v); });
        return render_impl<QGateKind, Qudit>(n, opts, &values, qudit_text);
    }
    return render_impl<QGateKind, Qudit>(n, opts, nullptr, qudit_text);
}

std::string render_dot(const BNetlist& n, const RenderOptions& opts) {
    if (opts.bit_values) {
        auto values = all_values<BGateKind, bool>(
            n, *opts.bit_values,
            [](BGateKind k, bool a, std::optional<bool> b) {
                return eval_bgate(k, a, b);
            },
            +[](int v) { return v != 0; });
        return render_impl<BGateKind, bool>(n, opts, &values, bit_text);
    }
    return render_impl<BGateKind, bool>(n, opts, nullptr, bit_text);
}

} // namespace mvl
