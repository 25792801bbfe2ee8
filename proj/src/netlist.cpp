#include "mvl/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace mvl {

std::string_view to_string(ValidationError::Kind kind) {
    using K = ValidationError::Kind;
    switch (kind) {
    case K::UnknownSignal:      return "unknown-signal";
    case K::DuplicateName:      return "duplicate-name";
    case K::ArityMismatch:      return "arity-mismatch";
    case K::SlotViolation:      return "slot-violation";
    case K::ValueOutOfRange:    return "value-out-of-range";
    case K::CombinationalCycle: return "combinational-cycle";
    }
    return "?";
}

std::string format(const ValidationError& error) {
    std::string out;
    if (error.line > 0)
        out += "line " + std::to_string(error.line) + ": ";
    out += std::string(to_string(error.kind)) + ": " + error.message;
    return out;
}

namespace {

template <typename KindT>
struct Dialect;

template <>
struct Dialect<QGateKind> {
    static constexpr int max_const = 3;
    // Quaternary gates always read strictly earlier slots.
    static constexpr bool same_slot_chains = false;
    static std::optional<QGateKind> kind_of(std::string_view token) {
        return qgate_from_string(token);
    }
};

template <>
struct Dialect<BGateKind> {
    static constexpr int max_const = 1;
    // Lowered gate replacements are multi-level but stay in the slot of
    // the gate they replaced, so earlier gates in a slot may feed later
    // ones.
    static constexpr bool same_slot_chains = true;
    static std::optional<BGateKind> kind_of(std::string_view token) {
        return bgate_from_string(token);
    }
};

bool is_ident(std::string_view s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '.';
    });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Where each element was declared, for error messages.
struct LineInfo {
    std::map<std::string, int> by_locus;

    int lookup(const std::string& locus) const {
        auto it = by_locus.find(locus);
        return it == by_locus.end() ? 0 : it->second;
    }
};

template <typename KindT>
struct ValidationContext {
    const BasicNetlist<KindT>& n;
    const LineInfo* lines = nullptr;
    std::vector<ValidationError> errors;

    void report(ValidationError::Kind kind, const std::string& locus,
                std::string message) {
        int line = lines ? lines->lookup(locus) : 0;
        errors.push_back({kind, locus, std::move(message), line});
    }
};

// Name uniqueness, reference resolution, arities, constant ranges and
// per-gate slot sanity. Slot ordering between gates is checked
// separately so unslotted netlists can be levelized first.
template <typename KindT>
void check_structure(ValidationContext<KindT>& ctx) {
    const auto& n = ctx.n;
    std::set<std::string> declared;
    auto declare = [&](const std::string& name) {
        if (!declared.insert(name).second)
            ctx.report(ValidationError::Kind::DuplicateName, name,
                       "name '" + name + "' is declared more than once");
    };
    for (const auto& in : n.inputs)
        declare(in);
    for (const auto& c : n.constants)
        declare(c.name);
    for (const auto& g : n.gates)
        declare(g.id);
    for (const auto& o : n.outputs)
        declare(o.name);

    std::set<std::string> signals;
    for (const auto& in : n.inputs)
        signals.insert(in);
    for (const auto& c : n.constants)
        signals.insert(c.name);
    for (const auto& g : n.gates)
        signals.insert(g.id);

    for (const auto& c : n.constants) {
        if (c.value < 0 || c.value > Dialect<KindT>::max_const)
            ctx.report(ValidationError::Kind::ValueOutOfRange, c.name,
                       "constant " + c.name + " = " +
                           std::to_string(c.value) + " is outside 0.." +
                           std::to_string(Dialect<KindT>::max_const));
    }

    for (const auto& g : n.gates) {
        int want = arity(g.kind);
        if (static_cast<int>(g.inputs.size()) != want)
            ctx.report(ValidationError::Kind::ArityMismatch, g.id,
                       "gate " + g.id + " (" + std::string(to_string(g.kind)) +
                           ") takes " + std::to_string(want) +
                           " input(s), got " +
                           std::to_string(g.inputs.size()));
        for (const auto& src : g.inputs) {
            if (!signals.count(src))
                ctx.report(ValidationError::Kind::UnknownSignal, g.id,
                           "gate " + g.id + " reads undeclared signal '" +
                               src + "'");
        }
        if (g.slot && (*g.slot < 2 || *g.slot % 2 != 0))
            ctx.report(ValidationError::Kind::SlotViolation, g.id,
                       "gate " + g.id + " sits at slot " +
                           std::to_string(*g.slot) +
                           "; gates occupy even slots >= 2");
    }

    for (const auto& o : n.outputs) {
        if (!signals.count(o.source))
            ctx.report(ValidationError::Kind::UnknownSignal, o.name,
                       "output " + o.name + " taps undeclared signal '" +
                           o.source + "'");
    }
}

// Slot ordering between gates; assumes references resolve.
template <typename KindT>
void check_slot_order(ValidationContext<KindT>& ctx) {
    const auto& n = ctx.n;
    std::map<std::string, int> slot_of;      // signal -> slot
    std::map<std::string, size_t> decl_of;   // gate id -> declaration index
    for (const auto& in : n.inputs)
        slot_of[in] = 0;
    for (const auto& c : n.constants)
        slot_of[c.name] = 0;
    for (size_t i = 0; i < n.gates.size(); ++i) {
        decl_of[n.gates[i].id] = i;
        if (n.gates[i].slot)
            slot_of[n.gates[i].id] = *n.gates[i].slot;
    }

    for (size_t i = 0; i < n.gates.size(); ++i) {
        const auto& g = n.gates[i];
        if (!g.slot) {
            ctx.report(ValidationError::Kind::SlotViolation, g.id,
                       "gate " + g.id + " has no timeslot");
            continue;
        }
        for (const auto& src : g.inputs) {
            auto it = slot_of.find(src);
            if (it == slot_of.end())
                continue; // unknown signal, reported elsewhere
            bool ok = it->second < *g.slot;
            if (!ok && Dialect<KindT>::same_slot_chains &&
                it->second == *g.slot) {
                auto d = decl_of.find(src);
                ok = d != decl_of.end() && d->second < i;
            }
            if (!ok)
                ctx.report(ValidationError::Kind::SlotViolation, g.id,
                           "gate " + g.id + " at slot " +
                               std::to_string(*g.slot) + " reads '" + src +
                               "' from slot " + std::to_string(it->second));
        }
    }
}

template <typename KindT>
std::vector<ValidationError> validate_impl(const BasicNetlist<KindT>& n,
                                           const LineInfo* lines) {
    ValidationContext<KindT> ctx{n, lines, {}};
    check_structure(ctx);
    check_slot_order(ctx);
    return std::move(ctx.errors);
}

template <typename KindT>
NetlistResult<BasicNetlist<KindT>>
assign_slots_impl(const BasicNetlist<KindT>& n, const LineInfo* lines) {
    NetlistResult<BasicNetlist<KindT>> result;
    BasicNetlist<KindT> out = n;

    std::map<std::string, size_t> gate_index;
    for (size_t i = 0; i < out.gates.size(); ++i)
        gate_index[out.gates[i].id] = i;
    std::set<std::string> slot0;
    for (const auto& in : out.inputs)
        slot0.insert(in);
    for (const auto& c : out.constants)
        slot0.insert(c.name);

    auto report = [&](ValidationError::Kind kind, const std::string& locus,
                      std::string message) {
        int line = lines ? lines->lookup(locus) : 0;
        result.errors.push_back({kind, locus, std::move(message), line});
    };

    // DFS levelization with cycle detection. state: 0 untouched,
    // 1 in progress, 2 resolved.
    std::vector<int> state(out.gates.size(), 0);
    std::function<std::optional<int>(size_t)> resolve =
        [&](size_t i) -> std::optional<int> {
        auto& g = out.gates[i];
        if (state[i] == 2)
            return g.slot;
        if (state[i] == 1) {
            report(ValidationError::Kind::CombinationalCycle, g.id,
                   "gate " + g.id + " depends on itself");
            return std::nullopt;
        }
        state[i] = 1;
        int deepest = 0;
        bool failed = false;
        for (const auto& src : g.inputs) {
            if (slot0.count(src))
                continue;
            auto it = gate_index.find(src);
            if (it == gate_index.end()) {
                report(ValidationError::Kind::UnknownSignal, g.id,
                       "gate " + g.id + " reads undeclared signal '" + src +
                           "'");
                failed = true;
                continue;
            }
            auto src_slot = resolve(it->second);
            if (!src_slot) {
                failed = true;
                continue;
            }
            deepest = std::max(deepest, *src_slot);
        }
        if (failed) {
            state[i] = 2;
            g.slot.reset();
            return std::nullopt;
        }
        int minimal = deepest + 2;
        if (g.slot) {
            bool consistent = *g.slot >= 2 && *g.slot % 2 == 0;
            if (consistent) {
                for (const auto& src : g.inputs) {
                    int src_slot = 0;
                    if (!slot0.count(src)) {
                        auto it = gate_index.find(src);
                        src_slot = out.gates[it->second].slot.value_or(0);
                    }
                    bool ok = src_slot < *g.slot;
                    if (!ok && Dialect<KindT>::same_slot_chains &&
                        src_slot == *g.slot) {
                        auto it = gate_index.find(src);
                        ok = it != gate_index.end() && it->second < i;
                    }
                    if (!ok)
                        consistent = false;
                }
            }
            if (!consistent) {
                report(ValidationError::Kind::SlotViolation, g.id,
                       "gate " + g.id + " has explicit slot " +
                           std::to_string(*g.slot) +
                           " inconsistent with its sources");
                state[i] = 2;
                return std::nullopt;
            }
        } else {
            g.slot = minimal;
        }
        state[i] = 2;
        return g.slot;
    };

    for (size_t i = 0; i < out.gates.size(); ++i)
        resolve(i);

    if (!result.errors.empty())
        return result;
    result.netlist = std::move(out);
    return result;
}

template <typename KindT>
std::string serialize_impl(const BasicNetlist<KindT>& n) {
    std::ostringstream out;
    out << "circuit " << n.name << "\n";
    for (const auto& in : n.inputs)
        out << "input " << in << "\n";
    for (const auto& c : n.constants)
        out << "const " << c.name << " = " << c.value << "\n";
    for (const auto& g : n.gates) {
        out << "gate " << g.id << " = " << to_string(g.kind) << "(";
        for (size_t i = 0; i < g.inputs.size(); ++i) {
            if (i)
                out << ", ";
            out << g.inputs[i];
        }
        out << ")";
        if (g.slot)
            out << " @ " << *g.slot;
        out << "\n";
    }
    for (const auto& o : n.outputs)
        out << "output " << o.name << " = " << o.source << "\n";
    return out.str();
}

[[noreturn]] void syntax_error(int line, const std::string& msg) {
    throw SyntaxError("line " + std::to_string(line) + ": " + msg, line);
}

std::string expect_ident(std::string_view token, int line,
                         const char* what) {
    token = trim(token);
    if (!is_ident(token))
        syntax_error(line, std::string("expected ") + what + ", got '" +
                               std::string(token) + "'");
    return std::string(token);
}

int expect_int(std::string_view token, int line, const char* what) {
    token = trim(token);
    std::string s(token);
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        syntax_error(line, std::string("expected ") + what + ", got '" + s +
                               "'");
    return value;
}

template <typename KindT>
NetlistResult<BasicNetlist<KindT>> parse_impl(std::string_view text) {
    BasicNetlist<KindT> n;
    LineInfo lines;
    bool saw_circuit = false;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = eol == std::string_view::npos
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty())
            continue;

        size_t sp = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, sp);
        std::string_view rest =
            sp == std::string_view::npos ? std::string_view{} : line.substr(sp);
        rest = trim(rest);

        if (keyword == "circuit") {
            if (saw_circuit)
                syntax_error(line_no, "duplicate circuit line");
            n.name = expect_ident(rest, line_no, "circuit name");
            saw_circuit = true;
            continue;
        }
        if (!saw_circuit)
            syntax_error(line_no, "expected 'circuit <name>' first");

        if (keyword == "input") {
            std::string name = expect_ident(rest, line_no, "input name");
            n.inputs.push_back(name);
            lines.by_locus.emplace(name, line_no);
        } else if (keyword == "const") {
            size_t eq = rest.find('=');
            if (eq == std::string_view::npos)
                syntax_error(line_no, "expected 'const <name> = <value>'");
            std::string name =
                expect_ident(rest.substr(0, eq), line_no, "constant name");
            int value = expect_int(rest.substr(eq + 1), line_no,
                                   "constant value");
            n.constants.push_back({name, value});
            lines.by_locus.emplace(name, line_no);
        } else if (keyword == "gate") {
            size_t eq = rest.find('=');
            if (eq == std::string_view::npos)
                syntax_error(line_no,
                             "expected 'gate <id> = <KIND>(<inputs>)'");
            std::string id =
                expect_ident(rest.substr(0, eq), line_no, "gate id");
            std::string_view def = trim(rest.substr(eq + 1));

            std::optional<int> slot;
            if (auto at = def.rfind('@'); at != std::string_view::npos) {
                slot = expect_int(def.substr(at + 1), line_no, "slot number");
                def = trim(def.substr(0, at));
            }

            size_t open = def.find('(');
            if (open == std::string_view::npos || def.back() != ')')
                syntax_error(line_no, "expected '<KIND>(<inputs>)'");
            std::string kind_token(trim(def.substr(0, open)));
            auto kind = Dialect<KindT>::kind_of(kind_token);
            if (!kind)
                syntax_error(line_no,
                             "unknown gate kind '" + kind_token + "'");
            std::string_view args =
                def.substr(open + 1, def.size() - open - 2);

            std::vector<std::string> inputs;
            size_t start = 0;
            if (!trim(args).empty()) {
                while (true) {
                    size_t comma = args.find(',', start);
                    std::string_view piece =
                        comma == std::string_view::npos
                            ? args.substr(start)
                            : args.substr(start, comma - start);
                    inputs.push_back(
                        expect_ident(piece, line_no, "signal name"));
                    if (comma == std::string_view::npos)
                        break;
                    start = comma + 1;
                }
            }
            n.gates.push_back({id, *kind, std::move(inputs), slot});
            lines.by_locus.emplace(id, line_no);
        } else if (keyword == "output") {
            size_t eq = rest.find('=');
            if (eq == std::string_view::npos)
                syntax_error(line_no, "expected 'output <name> = <signal>'");
            std::string name =
                expect_ident(rest.substr(0, eq), line_no, "output name");
            std::string src =
                expect_ident(rest.substr(eq + 1), line_no, "signal name");
            n.outputs.push_back({name, src});
            lines.by_locus.emplace(name, line_no);
        } else {
            syntax_error(line_no, "unknown declaration '" +
                                      std::string(keyword) + "'");
        }
    }
    if (!saw_circuit)
        syntax_error(line_no == 0 ? 1 : line_no, "empty netlist");

    NetlistResult<BasicNetlist<KindT>> result;
    ValidationContext<KindT> ctx{n, &lines, {}};
    check_structure(ctx);
    if (!ctx.errors.empty()) {
        result.errors = std::move(ctx.errors);
        return result;
    }
    auto slotted = assign_slots_impl(n, &lines);
    if (!slotted.netlist) {
        result.errors = std::move(slotted.errors);
        return result;
    }
    auto final_errors = validate_impl(*slotted.netlist, &lines);
    if (!final_errors.empty()) {
        result.errors = std::move(final_errors);
        return result;
    }
    result.netlist = std::move(slotted.netlist);
    return result;
}

} // namespace

NetlistResult<QNetlist> parse_qnetlist(std::string_view text) {
    return parse_impl<QGateKind>(text);
}

NetlistResult<BNetlist> parse_bnetlist(std::string_view text) {
    return parse_impl<BGateKind>(text);
}

std::vector<ValidationError> validate(const QNetlist& n) {
    return validate_impl(n, nullptr);
}

std::vector<ValidationError> validate(const BNetlist& n) {
    return validate_impl(n, nullptr);
}

NetlistResult<QNetlist> assign_slots(const QNetlist& n) {
    return assign_slots_impl(n, nullptr);
}

NetlistResult<BNetlist> assign_slots(const BNetlist& n) {
    return assign_slots_impl(n, nullptr);
}

std::string serialize_netlist(const QNetlist& n) {
    return serialize_impl(n);
}

std::string serialize_netlist(const BNetlist& n) {
    return serialize_impl(n);
}

} // namespace mvl
