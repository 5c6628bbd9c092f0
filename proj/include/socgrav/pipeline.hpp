#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "socgrav/centrality.hpp"
#include "socgrav/graph.hpp"
#include "socgrav/layout.hpp"
#include "socgrav/lombardi.hpp"
#include "socgrav/metrics.hpp"
#include "socgrav/render.hpp"

namespace socgrav {

// Everything needed to reproduce one drawing.
struct PipelineOptions {
    LayoutConfig layout;
    CentralityKind centrality = CentralityKind::degree;
    double mass_floor = kDefaultMassFloor;
    bool lombardi = false;
    bool show_labels = false;
};

struct PipelineResult {
    CentralityVector centrality;
    MassVector mass;
    std::vector<Vec2> positions;
    std::vector<ArcEdge> arcs;  // empty unless options.lombardi
    DrawingMetrics metrics;     // always on straight segments
};

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options);

std::string pipeline_svg(const Graph& g, const PipelineResult& result, const PipelineOptions& options);

/// Metrics fields at top level plus a "config" object echoing every
/// resolved option.
std::string metrics_report_json(const DrawingMetrics& metrics, const PipelineOptions& options);

// {"vertices": [...], "positions": [[x, y], ...]}
std::string positions_json(const Graph& g, const std::vector<Vec2>& positions);
std::vector<Vec2> parse_positions_json(std::string_view text, const Graph& g);

}  // namespace socgrav
