#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "strata/cache.hpp"
#include "strata/capacity.hpp"
#include "strata/io.hpp"
#include "strata/report.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string out_dir = ".";
    std::string mode = "capacity";
    std::string format = "csv";
    std::optional<std::string> cache_dir;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_mode = true,
                bool with_format = true) {
    cmd->add_option("--out", opts.out_dir, "Output directory (created if missing)");
    cmd->add_option("--jobs", opts.jobs, "Worker threads; 0 = all cores");
    cmd->add_option("--cache", opts.cache_dir, "Cache directory for stratification results");
    if (with_mode)
        cmd->add_option("--mode", opts.mode, "dim_loc route: capacity | clique | cross-check");
    if (with_format) cmd->add_option("--format", opts.format, "Output format: csv | json");
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    std::cout << "wrote " << path.string() << '\n';
    return out;
}

std::string table_file(const std::string& stem, strata::OutputFormat format) {
    return stem + (format == strata::OutputFormat::csv ? ".csv" : ".json");
}

// Loads dims from the cache when that honestly answers the request: a
// cross-check run must always recompute both routes.
strata::Stratification stratify_cached(const strata::PartitionGraph& g, strata::DimMode mode,
                                       const CommonOptions& opts) {
    if (opts.cache_dir && mode != strata::DimMode::cross_check) {
        std::string warning;
        if (auto dims = strata::cache_load(*opts.cache_dir, g.n(), &warning);
            dims && static_cast<strata::VertexId>(dims->size()) == g.vertex_count())
            return strata::derive_stratification(g.n(), std::move(*dims));
        if (!warning.empty()) std::cerr << "warning: " << warning << "; recomputing\n";
    }
    strata::Stratification s = strata::stratify(g, mode, opts.jobs);
    if (opts.cache_dir) strata::cache_store(*opts.cache_dir, s);
    return s;
}

int run_graph(int n, const CommonOptions& opts) {
    const strata::PartitionGraph g = strata::build_graph(n, opts.jobs);
    auto out = open_output(opts.out_dir, "graph_n" + std::to_string(n) + ".edges");
    strata::write_edge_list(out, g);
    return 0;
}

int run_layers(int n, const CommonOptions& opts) {
    const auto format = strata::parse_output_format(opts.format);
    const strata::PartitionGraph g = strata::build_graph(n, opts.jobs);
    const strata::Stratification s = stratify_cached(g, strata::parse_dim_mode(opts.mode), opts);

    std::vector<strata::CapacityProfile> profiles(static_cast<std::size_t>(g.vertex_count()));
    for (strata::VertexId v = 0; v < g.vertex_count(); ++v)
        profiles[static_cast<std::size_t>(v)] = strata::capacity_profile(g.vertex(v));

    auto layers_out = open_output(opts.out_dir, table_file("layers", format));
    strata::write_table(layers_out, format, strata::layers_table(g, s, profiles));
    auto sizes_out = open_output(opts.out_dir, table_file("layer_sizes", format));
    strata::write_table(sizes_out, format, strata::layer_sizes_table(s));
    return 0;
}

int run_thresholds(int n_max, const CommonOptions& opts) {
    const auto format = strata::parse_output_format(opts.format);
    const strata::ThresholdTable table =
        strata::scan_thresholds(n_max, strata::parse_dim_mode(opts.mode), opts.jobs);
    auto out = open_output(opts.out_dir, table_file("thresholds", format));
    strata::write_table(out, format, strata::thresholds_table(table));
    return 0;
}

int run_boundaries(int n, int r, const CommonOptions& opts) {
    const auto format = strata::parse_output_format(opts.format);
    const strata::PartitionGraph g = strata::build_graph(n, opts.jobs);
    const strata::Stratification s = stratify_cached(g, strata::parse_dim_mode(opts.mode), opts);
    const strata::BoundarySets b = strata::boundaries(s, g, r);
    const strata::InterfaceGraph ig = strata::interface_graph(s, g, r);

    auto bounds_out = open_output(opts.out_dir, table_file("boundaries", format));
    strata::write_table(bounds_out, format, strata::boundaries_table(g, b));
    auto edges_out = open_output(opts.out_dir, table_file("interface_edges", format));
    strata::write_table(edges_out, format, strata::interface_edges_table(g, ig));
    return 0;
}

int run_traces(int n, const CommonOptions& opts) {
    const auto format = strata::parse_output_format(opts.format);
    const strata::PartitionGraph g = strata::build_graph(n, opts.jobs);
    const strata::Stratification s = stratify_cached(g, strata::parse_dim_mode(opts.mode), opts);

    std::vector<strata::Region> regions;
    regions.push_back(strata::axis(g));
    if (n >= 2) regions.push_back(strata::framework(g));

    std::vector<strata::TraceRow> rows;
    for (const strata::Region& region : regions) {
        for (int r = 0; r <= s.delta; ++r)
            for (strata::VertexId v : strata::layer_trace(s, region, r))
                rows.push_back({region.name, "layer", r, v});
        for (int r = 0; r <= s.delta; ++r) {
            const strata::BoundarySets b = strata::boundaries(s, g, r);
            for (strata::VertexId v : strata::boundary_trace(b, region))
                rows.push_back({region.name, "boundary", r, v});
        }
    }
    auto out = open_output(opts.out_dir, table_file("traces", format));
    strata::write_table(out, format, strata::traces_table(g, rows));
    return 0;
}

int run_verify(int n_max, const CommonOptions& opts) {
    strata::VerifyOptions vopts;
    vopts.n_max = n_max;
    vopts.jobs = opts.jobs;
    if (opts.cache_dir) vopts.cache_dir = fs::path(*opts.cache_dir);

    const strata::VerificationReport report = strata::run_verification(vopts);
    auto out = open_output(opts.out_dir, "verify_report.json");
    out << strata::machine_report(report);
    strata::print_report(std::cout, report);
    return strata::any_falsified(report) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simplex stratification of partition graphs"};
    app.require_subcommand(1);

    int n = 1, n_max = 30, r = 1;
    CommonOptions graph_opts, layers_opts, thresholds_opts, boundaries_opts, traces_opts,
        verify_opts;

    auto* graph_cmd = app.add_subcommand("graph", "Write the edge list of G_n");
    graph_cmd->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
    add_common(graph_cmd, graph_opts, false, false);

    auto* layers_cmd = app.add_subcommand("layers", "Write per-vertex layers and layer sizes");
    layers_cmd->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
    add_common(layers_cmd, layers_opts);

    auto* thresholds_cmd =
        app.add_subcommand("thresholds", "Scan n = 1..n_max for first occurrences");
    thresholds_cmd->add_option("--n-max", n_max, "Scan bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(thresholds_cmd, thresholds_opts);

    auto* boundaries_cmd =
        app.add_subcommand("boundaries", "Write the r/r+1 phase boundary and interface edges");
    boundaries_cmd->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
    boundaries_cmd->add_option("--r", r, "Lower layer of the interface")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(boundaries_cmd, boundaries_opts);

    auto* traces_cmd =
        app.add_subcommand("traces", "Write layer and boundary traces on the axis and framework");
    traces_cmd->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
    add_common(traces_cmd, traces_opts);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the claim registry over n = 1..n_max in cross-check mode");
    verify_cmd->add_option("--n-max", n_max, "Verification bound")->check(CLI::PositiveNumber);
    add_common(verify_cmd, verify_opts, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (graph_cmd->parsed()) return run_graph(n, graph_opts);
        if (layers_cmd->parsed()) return run_layers(n, layers_opts);
        if (thresholds_cmd->parsed()) return run_thresholds(n_max, thresholds_opts);
        if (boundaries_cmd->parsed()) return run_boundaries(n, r, boundaries_opts);
        if (traces_cmd->parsed()) return run_traces(n, traces_opts);
        if (verify_cmd->parsed()) return run_verify(n_max, verify_opts);
    } catch (const strata::consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
