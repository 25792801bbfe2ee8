#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvl/examples.hpp"
#include "mvl/laws.hpp"
#include "mvl/lower.hpp"
#include "mvl/netlist.hpp"
#include "mvl/render.hpp"
#include "mvl/sim.hpp"
#include "mvl/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1; // logical failure (errors, mismatches)
constexpr int exit_usage = 2;   // bad invocation

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw mvl::Error("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw mvl::Error("cannot open " + path + " for writing");
    file << text;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// .bvl means binary, .mvl quaternary; stdin falls back to the flag.
bool is_binary_source(const std::string& path, bool binary_flag) {
    if (ends_with(path, ".bvl"))
        return true;
    if (ends_with(path, ".mvl"))
        return false;
    return binary_flag;
}

mvl::QNetlist load_qnetlist(const std::string& path) {
    auto parsed = mvl::parse_qnetlist(read_input(path));
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::cerr << path << ": " << mvl::format(e) << "\n";
        throw mvl::Error("netlist has errors");
    }
    return *parsed.netlist;
}

mvl::BNetlist load_bnetlist(const std::string& path) {
    auto parsed = mvl::parse_bnetlist(read_input(path));
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::cerr << path << ": " << mvl::format(e) << "\n";
        throw mvl::Error("netlist has errors");
    }
    return *parsed.netlist;
}

int parse_level(const std::string& text, int max_value) {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size() || v < 0 || v > max_value)
        throw mvl::ValueOutOfRange("value '" + text + "' is outside 0.." +
                                   std::to_string(max_value));
    return v;
}

mvl::QAssignment parse_qassignment(const std::vector<std::string>& sets) {
    mvl::QAssignment a;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw mvl::Error("--set expects NAME=VALUE, got '" + s + "'");
        a.emplace(s.substr(0, eq), mvl::Qudit(parse_level(s.substr(eq + 1), 3)));
    }
    return a;
}

mvl::BAssignment parse_bassignment(const std::vector<std::string>& sets) {
    mvl::BAssignment a;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw mvl::Error("--set expects NAME=VALUE, got '" + s + "'");
        a.emplace(s.substr(0, eq), parse_level(s.substr(eq + 1), 1) != 0);
    }
    return a;
}

int run_check(const std::string& path, bool binary) {
    std::string text = read_input(path);
    std::vector<mvl::ValidationError> errors;
    if (is_binary_source(path, binary))
        errors = mvl::parse_bnetlist(text).errors;
    else
        errors = mvl::parse_qnetlist(text).errors;
    for (const auto& e : errors)
        std::cerr << path << ": " << mvl::format(e) << "\n";
    if (errors.empty()) {
        std::cout << "ok\n";
        return exit_ok;
    }
    return exit_failure;
}

int run_sim(const std::string& path, bool binary,
            const std::vector<std::string>& sets) {
    if (is_binary_source(path, binary)) {
        auto n = load_bnetlist(path);
        auto outs = mvl::sim_b(n, parse_bassignment(sets));
        for (const auto& o : n.outputs)
            std::cout << o.name << " = " << (outs.at(o.name) ? 1 : 0) << "\n";
    } else {
        auto n = load_qnetlist(path);
        auto outs = mvl::sim_q(n, parse_qassignment(sets));
        for (const auto& o : n.outputs)
            std::cout << o.name << " = " << outs.at(o.name).value() << "\n";
    }
    return exit_ok;
}

int run_tt(const std::string& path, bool binary, const std::string& csv_path) {
    mvl::TruthTable table;
    if (is_binary_source(path, binary))
        table = mvl::truth_table_b(load_bnetlist(path));
    else
        table = mvl::truth_table_q(load_qnetlist(path));
    if (!csv_path.empty())
        write_output(csv_path, table.to_csv());
    else
        std::cout << table.to_text();
    return exit_ok;
}

int run_lower(const std::string& path, const std::string& out_path) {
    auto n = load_qnetlist(path);
    auto lowered = mvl::lower_netlist(n);
    if (!lowered.ok()) {
        for (const auto& e : lowered.errors)
            std::cerr << path << ": " << mvl::format(e) << "\n";
        return exit_failure;
    }
    write_output(out_path, mvl::serialize_netlist(*lowered.netlist));
    return exit_ok;
}

int run_verify(const std::string& path) {
    auto report = mvl::check_equivalence(load_qnetlist(path));
    std::cout << report.to_text() << "\n";
    return report.equivalent ? exit_ok : exit_failure;
}

int run_laws(bool csv) {
    auto report = mvl::run_law_suite();
    std::cout << (csv ? report.to_csv() : report.to_text());
    size_t mismatches = 0;
    for (const auto& r : report.results)
        if (!r.matches())
            ++mismatches;
    if (mismatches) {
        std::cerr << mismatches << " law(s) deviate from their expected "
                  << "status\n";
        return exit_failure;
    }
    std::cout << report.results.size() << " laws checked, all statuses as "
              << "expected\n";
    return exit_ok;
}

int run_pack_tt(const std::string& in_path, const std::string& out_path) {
    auto table = mvl::TruthTable::from_csv(
        read_input(in_path), mvl::TruthTable::Radix::Quaternary);
    write_output(out_path, mvl::pack_truth_table(table).to_csv());
    return exit_ok;
}

int run_render(const std::string& path, bool binary, bool svg,
               bool show_slots, const std::vector<std::string>& sets) {
    mvl::RenderOptions opts;
    opts.show_slots = show_slots;
    std::string dot;
    if (is_binary_source(path, binary)) {
        if (!sets.empty())
            opts.bit_values = parse_bassignment(sets);
        dot = mvl::render_dot(load_bnetlist(path), opts);
    } else {
        if (!sets.empty())
            opts.values = parse_qassignment(sets);
        dot = mvl::render_dot(load_qnetlist(path), opts);
    }
    if (!svg) {
        std::cout << dot;
        return exit_ok;
    }
    FILE* pipe = popen("dot -Tsvg", "w");
    if (!pipe) {
        std::cerr << "graphviz 'dot' is not available; emit the graph "
                  << "description without --svg instead\n";
        return exit_failure;
    }
    fwrite(dot.data(), 1, dot.size(), pipe);
    int status = pclose(pipe);
    if (status != 0) {
        std::cerr << "graphviz 'dot' failed (is it installed?)\n";
        return exit_failure;
    }
    return exit_ok;
}

int run_example(const std::string& name, const std::string& out_path) {
    write_output(out_path, std::string(mvl::example_source(name)));
    return exit_ok;
}

int run_fuzz(long seeds, int max_inputs, int max_gates, bool verbose) {
    long failures = 0;
    long assignments = 0;
    for (long seed = 1; seed <= seeds; ++seed) {
        int n_inputs = 1 + static_cast<int>(seed % max_inputs);
        int n_gates = 1 + static_cast<int>(seed % max_gates);
        auto n = mvl::random_netlist(static_cast<std::uint64_t>(seed),
                                     n_inputs, n_gates);
        auto report = mvl::check_equivalence(n);
        assignments += report.assignments_checked;
        if (!report.equivalent) {
            ++failures;
            std::cout << "seed " << seed << ": " << report.to_text() << "\n";
        } else if (verbose) {
            std::cout << "seed " << seed << ": " << report.to_text() << "\n";
        }
    }
    std::cout << seeds << " seeds, " << assignments << " assignments, "
              << failures << " mismatches\n";
    return failures == 0 ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternary logic toolchain: simulate, verify and lower "
                 "time-slotted netlists"};
    app.require_subcommand(1);

    std::string file, out_path, csv_path, name;
    std::vector<std::string> sets;
    bool binary = false, svg = false, show_slots = false, csv = false;
    long seeds = 100;
    int max_inputs = 4, max_gates = 16;
    bool verbose = false;

    auto* check = app.add_subcommand("check", "parse and validate a netlist");
    check->add_option("file", file, "netlist file (- for stdin)")->required();
    check->add_flag("--binary", binary, "treat stdin as a binary netlist");

    auto* sim = app.add_subcommand("sim", "simulate one assignment");
    sim->add_option("file", file)->required();
    sim->add_option("--set", sets, "input assignment NAME=VALUE")
        ->take_all();
    sim->add_flag("--binary", binary);

    auto* tt = app.add_subcommand("tt", "print or export the truth table");
    tt->add_option("file", file)->required();
    tt->add_option("--csv", csv_path, "write CSV here instead of printing");
    tt->add_flag("--binary", binary);

    auto* lower = app.add_subcommand("lower", "convert to a binary netlist");
    lower->add_option("file", file)->required();
    lower->add_option("-o,--output", out_path, "output .bvl path");

    auto* verify = app.add_subcommand(
        "verify", "exhaustively check a netlist against its lowering");
    verify->add_option("file", file)->required();

    auto* laws = app.add_subcommand("laws", "run the algebra law suite");
    laws->add_flag("--csv", csv, "structured rows instead of text");

    auto* pack = app.add_subcommand("pack-tt",
                                    "pack a quaternary truth-table CSV");
    pack->add_option("file", file)->required();
    pack->add_option("-o,--output", out_path, "output CSV path");

    auto* render = app.add_subcommand("render", "emit a schematic graph");
    render->add_option("file", file)->required();
    render->add_flag("--svg", svg, "pipe through graphviz dot");
    render->add_flag("--show-slots", show_slots, "annotate timeslots");
    render->add_option("--set", sets, "annotate wires with these values")
        ->take_all();
    render->add_flag("--binary", binary);

    auto* example = app.add_subcommand("example", "write a built-in circuit");
    example->add_option("name", name, "decoder | demux | mux4")->required();
    example->add_option("-o,--output", out_path, "output path");

    auto* fuzz = app.add_subcommand("fuzz", "random equivalence campaign");
    fuzz->add_option("--seeds", seeds, "number of seeds to run");
    fuzz->add_option("--max-inputs", max_inputs, "inputs per netlist (1..4)");
    fuzz->add_option("--max-gates", max_gates, "gates per netlist (1..32)");
    fuzz->add_flag("-v,--verbose", verbose, "print one line per seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check->parsed())
            return run_check(file, binary);
        if (sim->parsed())
            return run_sim(file, binary, sets);
        if (tt->parsed())
            return run_tt(file, binary, csv_path);
        if (lower->parsed())
            return run_lower(file, out_path);
        if (verify->parsed())
            return run_verify(file);
        if (laws->parsed())
            return run_laws(csv);
        if (pack->parsed())
            return run_pack_tt(file, out_path);
        if (render->parsed())
            return run_render(file, binary, svg, show_slots, sets);
        if (example->parsed())
            return run_example(name, out_path);
        if (fuzz->parsed())
            return run_fuzz(seeds, max_inputs, max_gates, verbose);
    } catch (const mvl::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return exit_failure;
    } catch (const mvl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
