#include "socgrav/lombardi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace socgrav {

AugmentedGraph augment_with_dummies(const Graph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    std::vector<std::string> labels = g.labels();
    AugmentedGraph out;
    out.dummy_of_edge.reserve(g.edge_count());
    VertexId next = n;
    for (const Edge& e : g.edges()) {
        VertexId d = next++;
        edges.push_back({e.u, d});
        edges.push_back({d, e.v});
        labels.push_back(g.label(e.u) + "~" + g.label(e.v));
        out.dummy_of_edge.push_back(d);
    }
    out.graph = Graph(next, edges, std::move(labels));
    return out;
}

ArcGeometry fit_arc(Vec2 pu, Vec2 pv, Vec2 pd, double k) {
    if (pu == pv) throw std::invalid_argument("fit_arc: arc endpoints coincide");
    Vec2 b = pv - pu;
    Vec2 c = pd - pu;
    double twice_area = cross(b, c);
    if (0.5 * std::abs(twice_area) < 1e-9 * k * k) return StraightSegment{pu, pv};

    double bb = norm_squared(b), cc = norm_squared(c);
    double denom = 2.0 * twice_area;
    Vec2 rel{(c.y * bb - b.y * cc) / denom, (b.x * cc - c.x * bb) / denom};
    CircularArc arc;
    arc.center = pu + rel;
    arc.radius = norm(rel);
    // Travelling pu -> pd -> pv turns left exactly when the arc runs ccw.
    arc.ccw = cross(c, b) > 0.0;
    // The arc is the long way round when pd and the center share a side of the chord.
    arc.large = cross(b, rel) * twice_area > 0.0;
    arc.start = pu;
    arc.end = pv;
    return arc;
}

LombardiResult bend_edges(const Graph& g, std::span<const Vec2> positions, const LayoutConfig& config,
                          double mass_floor) {
    config.validate();
    if (positions.size() != g.vertex_count()) throw std::invalid_argument("bend_edges: wrong number of positions");
    LombardiResult out;
    out.positions.assign(positions.begin(), positions.end());
    if (g.edge_count() == 0) return out;

    AugmentedGraph aug = augment_with_dummies(g);
    const std::size_t n = g.vertex_count();
    const std::size_t total = aug.graph.vertex_count();

    std::vector<Vec2> start(positions.begin(), positions.end());
    start.reserve(total);
    for (const Edge& e : g.edges()) start.push_back(0.5 * (positions[e.u] + positions[e.v]));

    PhaseOptions options;
    options.movable.assign(total, true);
    std::fill(options.movable.begin(), options.movable.begin() + static_cast<std::ptrdiff_t>(n), false);

    LayoutConfig phase = config;
    phase.k = 0.5 * config.k;
    phase.schedule = ScheduleKind::constant;
    phase.gamma_constant = config.terminal_gamma();

    // Only dummy masses matter: original vertices never move.
    MassVector mass{std::vector<double>(total, mass_floor)};
    LayoutState state = run_layout_from(aug.graph, mass, phase, std::move(start), options);

    out.arcs.reserve(g.edge_count());
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        Vec2 control = state.positions[aug.dummy_of_edge[i]];
        out.arcs.push_back({e, control, fit_arc(positions[e.u], positions[e.v], control, config.k)});
    }
    return out;
}

LombardiResult layout_lombardi(const Graph& g, const MassVector& mass, const LayoutConfig& config,
                               double mass_floor) {
    auto positions = run_layout(g, mass, config);
    return bend_edges(g, positions, config, mass_floor);
}

}  // namespace socgrav
