#include "mvl/sim.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mvl {

namespace {

template <typename KindT, typename Value, typename EvalGate>
std::map<std::string, Value>
sim_impl(const BasicNetlist<KindT>& n,
         const std::map<std::string, Value>& assignment, EvalGate&& eval_gate,
         Value const_value(int)) {
    std::map<std::string, Value> values;
    for (const auto& in : n.inputs) {
        auto it = assignment.find(in);
        if (it == assignment.end())
            throw IncompleteAssignment("no value for input " + in);
        values.emplace(in, it->second);
    }
    for (const auto& c : n.constants)
        values.emplace(c.name, const_value(c.value));

    // Ascending slot order; declaration order breaks ties, which is what
    // lets lowered same-slot chains evaluate correctly.
    std::vector<size_t> order(n.gates.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return n.gates[a].slot.value_or(0) < n.gates[b].slot.value_or(0);
    });

    for (size_t idx : order) {
        const auto& g = n.gates[idx];
        auto operand = [&](size_t i) -> Value {
            auto it = values.find(g.inputs[i]);
            if (it == values.end())
                throw Error("gate " + g.id + " reads unresolved signal '" +
                            g.inputs[i] + "'");
            return it->second;
        };
        Value out = g.inputs.size() == 1
                        ? eval_gate(g.kind, operand(0), std::nullopt)
                        : eval_gate(g.kind, operand(0), operand(1));
        values.emplace(g.id, out);
    }

    std::map<std::string, Value> outputs;
    for (const auto& o : n.outputs) {
        auto it = values.find(o.source);
        if (it == values.end())
            throw Error("output " + o.name + " taps unresolved signal '" +
                        o.source + "'");
        outputs.emplace(o.name, it->second);
    }
    return outputs;
}

template <typename KindT, typename Value, typename Sim>
TruthTable table_impl(const BasicNetlist<KindT>& n, int input_cap, int radix,
                      Sim&& sim, Value from_digit(int), int to_digit(Value)) {
    if (static_cast<int>(n.inputs.size()) > input_cap)
        throw TooManyInputs("netlist has " + std::to_string(n.inputs.size()) +
                            " inputs, cap is " + std::to_string(input_cap));

    TruthTable table;
    table.radix = static_cast<TruthTable::Radix>(radix);
    table.input_names = n.inputs;
    for (const auto& o : n.outputs)
        table.output_names.push_back(o.name);

    std::vector<int> digits(n.inputs.size(), 0);
    for (;;) {
        std::map<std::string, Value> assignment;
        for (size_t i = 0; i < n.inputs.size(); ++i)
            assignment.emplace(n.inputs[i], from_digit(digits[i]));
        auto outs = sim(n, assignment);

        std::vector<int> row = digits;
        for (const auto& o : n.outputs)
            row.push_back(to_digit(outs.at(o.name)));
        table.rows.push_back(std::move(row));

        size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == radix)
            digits[--i] = 0;
        if (i == 0)
            break;
    }
    return table;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    size_t start = 0;
    for (;;) {
        size_t comma = line.find(',', start);
        std::string_view cell = comma == std::string_view::npos
                                    ? line.substr(start)
                                    : line.substr(start, comma - start);
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\r'))
            cell.remove_prefix(1);
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r'))
            cell.remove_suffix(1);
        cells.emplace_back(cell);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

} // namespace

std::map<std::string, Qudit> sim_q(const QNetlist& n, const QAssignment& a) {
    return sim_impl<QGateKind, Qudit>(
        n, a,
        [](QGateKind k, Qudit x, std::optional<Qudit> y) {
            return eval_qgate(k, x, y);
        },
        +[](int v) { return Qudit(v); });
}

std::map<std::string, bool> sim_b(const BNetlist& n, const BAssignment& a) {
    return sim_impl<BGateKind, bool>(
        n, a,
        [](BGateKind k, bool x, std::optional<bool> y) {
            return eval_bgate(k, x, y);
        },
        +[](int v) { return v != 0; });
}

TruthTable truth_table_q(const QNetlist& n, int input_cap) {
    return table_impl<QGateKind, Qudit>(
        n, input_cap, 4,
        [](const QNetlist& nl, const QAssignment& a) { return sim_q(nl, a); },
        +[](int v) { return Qudit(v); }, +[](Qudit q) { return q.value(); });
}

TruthTable truth_table_b(const BNetlist& n, int input_cap) {
    return table_impl<BGateKind, bool>(
        n, input_cap, 2,
        [](const BNetlist& nl, const BAssignment& a) { return sim_b(nl, a); },
        +[](int v) { return v != 0; }, +[](bool b) { return b ? 1 : 0; });
}

std::string TruthTable::to_csv() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& name : input_names) {
        out << (first ? "" : ",") << name;
        first = false;
    }
    for (const auto& name : output_names) {
        out << (first ? "" : ",") << name;
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
    return out.str();
}

TruthTable TruthTable::from_csv(std::string_view text, Radix radix) {
    std::vector<std::vector<std::string>> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = eol == std::string_view::npos
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        bool blank = raw.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank)
            lines.push_back(split_csv_line(raw));
    }
    if (lines.empty())
        throw MalformedTable("empty truth table");

    const auto& header = lines.front();
    size_t n_rows = lines.size() - 1;
    int base = static_cast<int>(radix);

    // Row count fixes the input-column count: radix^n rows.
    size_t n_inputs = 0;
    size_t expect = 1;
    while (expect < n_rows) {
        expect *= base;
        ++n_inputs;
    }
    if (expect != n_rows)
        throw MalformedTable("row count " + std::to_string(n_rows) +
                             " is not a power of " + std::to_string(base));
    if (n_inputs > header.size())
        throw MalformedTable("too few columns for " +
                             std::to_string(n_inputs) + " inputs");

    TruthTable table;
    table.radix = radix;
    table.input_names.assign(header.begin(), header.begin() + n_inputs);
    table.output_names.assign(header.begin() + n_inputs, header.end());

    std::vector<int> odometer(n_inputs, 0);
    for (size_t r = 0; r < n_rows; ++r) {
        const auto& cells = lines[r + 1];
        if (cells.size() != header.size())
            throw MalformedTable("row " + std::to_string(r + 1) + " has " +
                                 std::to_string(cells.size()) +
                                 " cells, expected " +
                                 std::to_string(header.size()));
        std::vector<int> row;
        for (const auto& cell : cells) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != cell.size() || cell.empty() || v < 0 || v >= base)
                throw MalformedTable("bad digit '" + cell + "' in row " +
                                     std::to_string(r + 1));
            row.push_back(v);
        }
        for (size_t i = 0; i < n_inputs; ++i)
            if (row[i] != odometer[i])
                throw MalformedTable("row " + std::to_string(r + 1) +
                                     " breaks odometer order");
        table.rows.push_back(std::move(row));

        size_t i = odometer.size();
        while (i > 0 && ++odometer[i - 1] == base)
            odometer[--i] = 0;
    }
    return table;
}

std::string TruthTable::to_text() const {
    std::vector<size_t> widths;
    auto all_names = input_names;
    all_names.insert(all_names.end(), output_names.begin(),
                     output_names.end());
    for (const auto& name : all_names)
        widths.push_back(std::max<size_t>(name.size(), 1));

    std::ostringstream out;
    for (size_t i = 0; i < all_names.size(); ++i) {
        if (i == input_names.size())
            out << " |";
        out << " " << std::string(widths[i] - all_names[i].size(), ' ')
            << all_names[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i == input_names.size())
                out << " |";
            std::string v = std::to_string(row[i]);
            out << " " << std::string(widths[i] - v.size(), ' ') << v;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace mvl
