#pragma once

#include <span>
#include <variant>
#include <vector>

#include "socgrav/centrality.hpp"
#include "socgrav/graph.hpp"
#include "socgrav/layout.hpp"
#include "socgrav/vec2.hpp"

namespace socgrav {

struct StraightSegment {
    Vec2 start;
    Vec2 end;
};

/// Arc of the circle (center, radius) from start to end. `ccw` gives the
/// travel direction in y-up drawing coordinates; `large` is set when the arc
/// spans more than half the circle.
struct CircularArc {
    Vec2 center;
    double radius = 0.0;
    bool ccw = false;
    bool large = false;
    Vec2 start;
    Vec2 end;
};

using ArcGeometry = std::variant<StraightSegment, CircularArc>;

struct ArcEdge {
    Edge edge;
    Vec2 control;  // final position of the edge's dummy vertex
    ArcGeometry geometry;
};

/// Original vertices keep their ids; the dummy for edge i is vertex
/// original.vertex_count() + i.
struct AugmentedGraph {
    Graph graph;
    std::vector<VertexId> dummy_of_edge;
};

AugmentedGraph augment_with_dummies(const Graph& g);

/// Arc from pu to pv through pd. Falls back to a straight segment when the
/// triangle area is below 1e-9 k^2. Throws std::invalid_argument if pu == pv.
ArcGeometry fit_arc(Vec2 pu, Vec2 pv, Vec2 pd, double k);

struct LombardiResult {
    std::vector<Vec2> positions;  // original vertices only
    std::vector<ArcEdge> arcs;    // one per edge, in g.edges() order
};

/// Bends the edges of an existing drawing. Original vertices stay frozen;
/// each dummy starts at its edge midpoint and settles under half-length
/// springs, repulsion from every other vertex, and floor-mass gravity
/// at the config's terminal gamma.
LombardiResult bend_edges(const Graph& g, std::span<const Vec2> positions, const LayoutConfig& config,
                          double mass_floor = kDefaultMassFloor);

/// run_layout followed by bend_edges.
LombardiResult layout_lombardi(const Graph& g, const MassVector& mass, const LayoutConfig& config,
                               double mass_floor = kDefaultMassFloor);

}  // namespace socgrav
