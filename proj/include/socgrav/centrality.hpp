#pragma once

#include <string_view>
#include <vector>

#include "socgrav/graph.hpp"

namespace socgrav {

enum class CentralityKind { degree, closeness, betweenness, uniform };

std::string_view to_string(CentralityKind kind);
CentralityKind centrality_kind_from_string(std::string_view name);

struct CentralityVector {
    CentralityKind kind = CentralityKind::uniform;
    std::vector<double> values;
};

/// Per-vertex gravitational mass. Mean is 1 and every entry is at least the
/// floor used to build it.
struct MassVector {
    std::vector<double> values;
};

inline constexpr double kDefaultMassFloor = 0.05;

CentralityVector degree_centrality(const Graph& g);

// 1 / mean hop distance to the other vertices of v's own component; 0 for
// isolated vertices.
CentralityVector closeness_centrality(const Graph& g);

// Exact betweenness over unordered pairs (Brandes accumulation, halved).
CentralityVector betweenness_centrality(const Graph& g);

CentralityVector uniform_centrality(const Graph& g);

CentralityVector compute_centrality(const Graph& g, CentralityKind kind);

MassVector normalize_mass(const CentralityVector& c, double mass_floor = kDefaultMassFloor);

}  // namespace socgrav
