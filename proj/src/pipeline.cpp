#include "socgrav/pipeline.hpp"

#include <json.hpp>

#include "socgrav/errors.hpp"

namespace socgrav {

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options) {
    options.layout.validate();
    PipelineResult r;
    r.centrality = compute_centrality(g, options.centrality);
    r.mass = normalize_mass(r.centrality, options.mass_floor);
    r.positions = run_layout(g, r.mass, options.layout);
    if (options.lombardi) r.arcs = bend_edges(g, r.positions, options.layout, options.mass_floor).arcs;
    r.metrics = compute_metrics(g, r.positions, r.centrality);
    return r;
}

std::string pipeline_svg(const Graph& g, const PipelineResult& result, const PipelineOptions& options) {
    SvgStyle style;
    style.k = options.layout.k;
    style.show_labels = options.show_labels;
    auto colors = spectrum_colors(result.centrality.values);
    return render_svg(g, result.positions, colors, options.lombardi ? &result.arcs : nullptr, style);
}

std::string metrics_report_json(const DrawingMetrics& metrics, const PipelineOptions& options) {
    nlohmann::json j = nlohmann::json::parse(to_json(metrics));
    const LayoutConfig& c = options.layout;
    j["config"] = {
        {"k", c.k},
        {"i_max", c.i_max},
        {"sigma", c.sigma},
        {"gamma_max", c.gamma_max},
        {"schedule", std::string(to_string(c.schedule))},
        {"gamma", c.gamma_constant},
        {"block_len", c.block_len},
        {"gamma_step", c.gamma_step},
        {"equilibrium_eps", c.equilibrium_eps},
        {"max_iterations", c.max_iterations},
        {"seed", c.seed},
        {"threads", c.threads},
        {"centrality", std::string(to_string(options.centrality))},
        {"mass_floor", options.mass_floor},
        {"lombardi", options.lombardi},
    };
    return j.dump(2) + "\n";
}

std::string positions_json(const Graph& g, const std::vector<Vec2>& positions) {
    nlohmann::json j;
    j["vertices"] = g.labels();
    auto arr = nlohmann::json::array();
    for (Vec2 p : positions) arr.push_back({p.x, p.y});
    j["positions"] = std::move(arr);
    return j.dump() + "\n";
}

std::vector<Vec2> parse_positions_json(std::string_view text, const Graph& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid positions JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("positions") || !j["positions"].is_array())
        throw ParseError("positions JSON needs a \"positions\" array", 0);
    const auto& arr = j["positions"];
    if (arr.size() != g.vertex_count())
        throw ParseError("positions JSON has " + std::to_string(arr.size()) + " entries for " +
                             std::to_string(g.vertex_count()) + " vertices",
                         0);
    std::vector<Vec2> out;
    out.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw ParseError("each position must be an [x, y] pair", 0);
        out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
}

}  // namespace socgrav
