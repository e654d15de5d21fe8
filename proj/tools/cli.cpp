#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "ghzcert/certifier.h"
#include "ghzcert/constructions.h"
#include "ghzcert/graphs.h"
#include "ghzcert/povm_oracle.h"
#include "ghzcert/report_io.h"
#include "ghzcert/state_io.h"

namespace ghzcert::cli {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int k = 0; k < length; ++k) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
    }
    return hex.str();
}

namespace {

// Thrown for anything that maps to exit code 3.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string input_path;
    std::string construction;
    int d = 0;
    std::vector<std::string> drop;
};

struct Loaded {
    StateSet set;
    std::string document;
};

struct RunConfig {
    Source source;
    std::string output;
    std::string partition = "all";
    std::string method = "graph";
    std::string arithmetic = "auto";
    bool allow_large = false;
    bool path_subgraph = false;
    std::string dump_system;
};

void add_source_options(CLI::App* cmd, Source& source, bool positional) {
    if (positional) {
        cmd->add_option("input", source.input_path, "State-set document to read");
    }
    cmd->add_option("--construction", source.construction, "Built-in construction: c333, c345, odd, even, c444w4")
        ->check(CLI::IsMember({"c333", "c345", "odd", "even", "c444w4"}));
    cmd->add_option("--d", source.d, "Local dimension for the odd/even families");
    cmd->add_option("--drop", source.drop, "Families to leave out, e.g. --drop S4,S5")->delimiter(',');
}

StateSet build_construction(const Source& source) {
    try {
        auto set = constructions::by_name(source.construction, source.d);
        if (!source.drop.empty()) {
            set = constructions::drop_families(set, source.drop);
        }
        return set;
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

Loaded load(const Source& source) {
    if (!source.construction.empty() && !source.input_path.empty()) {
        throw InvalidInput("give either an input document or --construction, not both");
    }
    if (!source.construction.empty()) {
        auto set = build_construction(source);
        auto document = write_state_set(set);
        return {std::move(set), std::move(document)};
    }
    if (source.input_path.empty()) {
        throw InvalidInput("no input: pass a state-set document or --construction");
    }
    std::ifstream in(source.input_path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read '" + source.input_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        auto set = parse_state_set(buffer.str());
        return {std::move(set), buffer.str()};
    } catch (const ParseError& e) {
        throw InvalidInput(source.input_path + ": " + e.what());
    }
}

std::vector<Partition> selected_partitions(const std::string& selector) {
    if (selector == "all") {
        return {kAllPartitions.begin(), kAllPartitions.end()};
    }
    try {
        return {parse_partition(selector)};
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

OracleOptions oracle_options(const RunConfig& cfg) {
    OracleOptions options;
    options.allow_large = cfg.allow_large;
    if (cfg.arithmetic == "exact") {
        options.arithmetic = Arithmetic::Exact;
    } else if (cfg.arithmetic == "float") {
        options.arithmetic = Arithmetic::Float;
    }
    return options;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InvalidInput("cannot write '" + path + "'");
    }
    file << text;
}

void log_arithmetic(Arithmetic a, double tolerance, std::ostream& err) {
    err << "arithmetic: " << to_string(a);
    if (a == Arithmetic::Float) {
        err << " (relative pivot tolerance " << tolerance << ")";
    }
    err << '\n';
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::StrongestNonlocal: return kStrongestNonlocal;
        case Verdict::NotStrongestNonlocal: return kNotStrongestNonlocal;
        default: return kInconclusive;
    }
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.source.construction.empty()) {
        throw InvalidInput("generate needs --construction");
    }
    const auto set = build_construction(cfg.source);
    emit(cfg.output, write_state_set(set), out);
    err << "states: " << set.state_count() << ", tuples: " << set.tuples.size() << ", dims: " << set.dims.d1 << 'x'
        << set.dims.d2 << 'x' << set.dims.d3 << '\n';
    return 0;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto loaded = load(cfg.source);
    const auto options = oracle_options(cfg);
    const auto report =
        cfg.method == "graph" ? certify_via_graphs(loaded.set) : certify(loaded.set, true, options);
    log_arithmetic(report.arithmetic, options.tolerance, err);
    emit(cfg.output, write_report(report, sha256_hex(loaded.document)), out);
    err << "graph verdict: " << to_string(report.graph_verdict) << '\n';
    if (report.oracle) {
        for (const auto& r : report.oracle->partitions) {
            err << "oracle " << to_string(r.partition) << ": dim=" << r.nullspace.dimension << ' '
                << to_string(r.verdict) << '\n';
        }
        if (report.oracle->agrees_with_graphs) {
            err << "graph/oracle agreement: " << (*report.oracle->agrees_with_graphs ? "yes" : "NO") << '\n';
        }
    }
    for (const auto& note : report.notes) {
        err << "note: " << note << '\n';
    }
    err << "verdict: " << to_string(report.verdict) << '\n';
    return exit_code_for(report.verdict);
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto loaded = load(cfg.source);
    try {
        validate_structure(loaded.set);
    } catch (const ValidationError& e) {
        throw InvalidInput(e.what());
    }
    const auto partitions = selected_partitions(cfg.partition);
    const bool to_stdout = cfg.output == "-" || (cfg.output.empty() && partitions.size() == 1);
    const std::string prefix = cfg.output.empty() ? "graph" : cfg.output;
    for (const auto p : partitions) {
        const auto graph = cfg.path_subgraph ? build_path_graph(loaded.set, p) : build_graph(loaded.set, p);
        const auto components = connected_components(graph).count;
        const std::string path =
            to_stdout ? "-" : prefix + "_" + to_string(p) + (cfg.path_subgraph ? "_path" : "") + ".dot";
        emit(path, to_dot(graph), out);
        err << "partition " << to_string(p) << ": " << graph.vertex_count() << " vertices, " << graph.edges.size()
            << " edges, " << components << (components == 1 ? " component (connected)" : " components")
            << (to_stdout ? "" : " -> " + path) << '\n';
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto loaded = load(cfg.source);
    const auto options = oracle_options(cfg);
    bool all_trivial = true;
    std::ostringstream dump;
    for (const auto p : selected_partitions(cfg.partition)) {
        ConstraintSystem system;
        try {
            system = build_constraints(loaded.set, p, options);
        } catch (const ResourceLimitExceeded& e) {
            err << "refused: " << e.what() << '\n';
            return kInconclusive;
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
        if (!cfg.dump_system.empty()) {
            write_triplets(dump, system);
        }
        const auto result = nullspace(system, options);
        const auto verdict = result.dimension == 1 && result.contains_identity ? OracleVerdict::TrivialOnly
                                                                               : OracleVerdict::NontrivialExists;
        all_trivial = all_trivial && verdict == OracleVerdict::TrivialOnly;
        log_arithmetic(result.arithmetic, options.tolerance, err);
        out << "partition " << to_string(p) << ": dim=" << result.dimension << ' ' << to_string(verdict)
            << " (unknowns=" << system.unknowns() << ", rows=" << system.row_count()
            << ", identity=" << (result.contains_identity ? "yes" : "no") << ", " << to_string(result.arithmetic);
        if (result.arithmetic == Arithmetic::Float) {
            out << ", tolerance=" << result.tolerance << (result.unstable ? ", UNSTABLE" : "");
        }
        out << ")\n";
    }
    if (!cfg.dump_system.empty()) {
        emit(cfg.dump_system, dump.str(), out);
    }
    return all_trivial ? kStrongestNonlocal : kNotStrongestNonlocal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build and certify strongly nonlocal sets of GHZ-like states", "ghzcert"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* generate = app.add_subcommand("generate", "Write a built-in construction as a state-set document");
    add_source_options(generate, cfg.source, false);
    generate->add_option("-o,--output", cfg.output, "Output path (default: stdout)");

    auto* certify_cmd = app.add_subcommand("certify", "Certify strongest nonlocality and write a report");
    add_source_options(certify_cmd, cfg.source, true);
    certify_cmd->add_option("--method", cfg.method, "graph, oracle or both")
        ->check(CLI::IsMember({"graph", "oracle", "both"}));
    certify_cmd->add_option("--arithmetic", cfg.arithmetic, "exact, float or auto")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    certify_cmd->add_flag("--allow-large", cfg.allow_large, "Lift the oracle's unknown-count limit");
    certify_cmd->add_option("-o,--output", cfg.output, "Report path (default: stdout)");

    auto* graph = app.add_subcommand("graph", "Emit partition graphs as DOT");
    add_source_options(graph, cfg.source, true);
    graph->add_option("--partition", cfg.partition, "A, B, C or all");
    graph->add_flag("--path-subgraph", cfg.path_subgraph, "Emit the path subgraph instead of the full graph");
    graph->add_option("-o,--output", cfg.output, "Output prefix; files are <prefix>_<X>.dot (default: graph)");

    auto* oracle = app.add_subcommand("oracle", "Solve the orthogonality-preserving POVM constraints");
    add_source_options(oracle, cfg.source, true);
    oracle->add_option("--partition", cfg.partition, "A, B, C or all");
    oracle->add_option("--arithmetic", cfg.arithmetic, "exact, float or auto")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    oracle->add_flag("--allow-large", cfg.allow_large, "Lift the unknown-count limit");
    oracle->add_option("--dump-system", cfg.dump_system, "Write the sparse-triplet constraint dump here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInvalidInput;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg, out, err);
        if (certify_cmd->parsed()) return cmd_certify(cfg, out, err);
        if (graph->parsed()) return cmd_graph(cfg, out, err);
        if (oracle->parsed()) return cmd_oracle(cfg, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace ghzcert::cli
