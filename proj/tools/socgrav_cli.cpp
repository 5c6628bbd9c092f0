// socgrav: force-directed layout with social gravity.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "socgrav/errors.hpp"
#include "socgrav/generators.hpp"
#include "socgrav/graph.hpp"
#include "socgrav/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw socgrav::Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw socgrav::Error("cannot write '" + path + "'");
    out << data;
    if (!out) throw socgrav::Error("write to '" + path + "' failed");
}

socgrav::Graph load_graph(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return socgrav::parse_graph(ss.str());
    }
    return socgrav::parse_graph(read_file(path));
}

std::string encode_graph(const socgrav::Graph& g, const std::string& format) {
    return format == "json" ? socgrav::serialize_json_graph(g) : socgrav::serialize_edge_list(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Force-directed graph layout with centrality-weighted gravity"};
    app.require_subcommand(1);

    // layout
    socgrav::PipelineOptions opts;
    std::string in_path, svg_path, metrics_path, positions_path, centrality = "degree", schedule = "stepped";
    auto* layout = app.add_subcommand("layout", "Lay out a graph and write SVG and metrics");
    layout->add_option("--in", in_path, "Graph file: edge list or JSON ('-' for stdin)")->required();
    layout->add_option("--centrality", centrality, "degree | closeness | betweenness | uniform")
        ->capture_default_str();
    layout->add_option("--k", opts.layout.k, "Natural edge length")->capture_default_str();
    layout->add_option("--imax", opts.layout.i_max, "Impulse cap")->capture_default_str();
    layout->add_option("--sigma", opts.layout.sigma, "Impulse-to-displacement scale")->capture_default_str();
    layout->add_option("--gamma-max", opts.layout.gamma_max, "Gravity cap for stepped schedules")
        ->capture_default_str();
    layout->add_option("--block", opts.layout.block_len, "Iterations per gravity step")->capture_default_str();
    layout->add_option("--gamma-step", opts.layout.gamma_step, "Gravity increment")->capture_default_str();
    layout->add_option("--schedule", schedule, "none | constant | stepped | equilibrium")->capture_default_str();
    layout->add_option("--gamma", opts.layout.gamma_constant, "Gravity for --schedule constant")
        ->capture_default_str();
    layout->add_option("--eps", opts.layout.equilibrium_eps, "Equilibrium impulse tolerance")
        ->capture_default_str();
    layout->add_option("--max-iter", opts.layout.max_iterations, "Iteration limit")->capture_default_str();
    layout->add_option("--seed", opts.layout.seed, "Random seed")->capture_default_str();
    layout->add_option("--threads", opts.layout.threads, "Worker threads (0 = all cores)")->capture_default_str();
    layout->add_option("--mass-floor", opts.mass_floor, "Minimum vertex mass")->capture_default_str();
    layout->add_flag("--lombardi", opts.lombardi, "Bend edges into circular arcs");
    layout->add_flag("--labels", opts.show_labels, "Draw vertex labels");
    layout->add_option("--svg", svg_path, "SVG output path");
    layout->add_option("--metrics", metrics_path, "Metrics JSON output path ('-' for stdout)");
    layout->add_option("--positions", positions_path, "Positions JSON output path");

    // gen-tree / gen-forest
    std::size_t tree_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_format = "edges";
    std::vector<std::size_t> sizes;
    auto* gen_tree = app.add_subcommand("gen-tree", "Write a uniform random tree");
    gen_tree->add_option("--n", tree_n, "Vertex count")->required();
    auto* gen_forest = app.add_subcommand("gen-forest", "Write a forest of random trees");
    gen_forest->add_option("--sizes", sizes, "Component sizes, comma separated")->required()->delimiter(',');
    for (auto* sub : {gen_tree, gen_forest}) {
        sub->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
        sub->add_option("--out", gen_out, "Output path (default stdout)");
        sub->add_option("--format", gen_format, "edges | json")
            ->check(CLI::IsMember({"edges", "json"}))
            ->capture_default_str();
    }

    // metrics
    std::string m_graph, m_positions, m_out, m_centrality = "degree";
    auto* metrics = app.add_subcommand("metrics", "Score an existing drawing");
    metrics->add_option("--in", m_graph, "Graph file")->required();
    metrics->add_option("--positions", m_positions, "Positions JSON from 'layout --positions'")->required();
    metrics->add_option("--centrality", m_centrality, "Centrality used for the radius correlation")
        ->capture_default_str();
    metrics->add_option("--out", m_out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*layout) {
            opts.centrality = socgrav::centrality_kind_from_string(centrality);
            opts.layout.schedule = socgrav::schedule_kind_from_string(schedule);
            socgrav::Graph g = load_graph(in_path);
            auto result = socgrav::run_pipeline(g, opts);
            if (!svg_path.empty()) write_output(svg_path, socgrav::pipeline_svg(g, result, opts));
            if (!positions_path.empty()) write_output(positions_path, socgrav::positions_json(g, result.positions));
            std::string report = socgrav::metrics_report_json(result.metrics, opts);
            if (!metrics_path.empty())
                write_output(metrics_path, report);
            else if (svg_path.empty() && positions_path.empty())
                std::cout << report;
        } else if (*gen_tree) {
            write_output(gen_out, encode_graph(socgrav::generate_random_tree(tree_n, gen_seed), gen_format));
        } else if (*gen_forest) {
            write_output(gen_out, encode_graph(socgrav::generate_forest(sizes, gen_seed), gen_format));
        } else if (*metrics) {
            socgrav::Graph g = load_graph(m_graph);
            auto positions = socgrav::parse_positions_json(read_file(m_positions), g);
            auto c = socgrav::compute_centrality(g, socgrav::centrality_kind_from_string(m_centrality));
            write_output(m_out, socgrav::to_json(socgrav::compute_metrics(g, positions, c)) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "socgrav: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
