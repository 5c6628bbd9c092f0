#include "socgrav/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace socgrav {

std::string_view to_string(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::degree: return "degree";
        case CentralityKind::closeness: return "closeness";
        case CentralityKind::betweenness: return "betweenness";
        case CentralityKind::uniform: return "uniform";
    }
    return "unknown";
}

CentralityKind centrality_kind_from_string(std::string_view name) {
    if (name == "degree") return CentralityKind::degree;
    if (name == "closeness") return CentralityKind::closeness;
    if (name == "betweenness") return CentralityKind::betweenness;
    if (name == "uniform" || name == "none") return CentralityKind::uniform;
    throw std::invalid_argument("unknown centrality '" + std::string(name) + "'");
}

CentralityVector degree_centrality(const Graph& g) {
    CentralityVector out{CentralityKind::degree, std::vector<double>(g.vertex_count())};
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.values[v] = static_cast<double>(g.degree(v));
    return out;
}

CentralityVector closeness_centrality(const Graph& g) {
    CentralityVector out{CentralityKind::closeness, std::vector<double>(g.vertex_count(), 0.0)};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto d = bfs_distances(g, v);
        std::uint64_t total = 0;
        std::uint64_t reached = 0;
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (u == v || d.dist[u] == kUnreachable) continue;
            total += d.dist[u];
            ++reached;
        }
        if (reached > 0) out.values[v] = static_cast<double>(reached) / static_cast<double>(total);
    }
    return out;
}

CentralityVector betweenness_centrality(const Graph& g) {
    const std::size_t n = g.vertex_count();
    CentralityVector out{CentralityKind::betweenness, std::vector<double>(n, 0.0)};

    std::vector<VertexId> order;
    std::vector<std::uint32_t> dist(n);
    std::vector<double> paths(n);
    std::vector<double> delta(n);
    order.reserve(n);

    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(paths.begin(), paths.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[s] = 0;
        paths[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            VertexId v = order[head];
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) paths[w] += paths[v];
            }
        }
        // Predecessors of w are the neighbors one hop closer to s.
        for (std::size_t i = order.size(); i-- > 1;) {
            VertexId w = order[i];
            for (VertexId v : g.neighbors(w)) {
                if (dist[v] != kUnreachable && dist[v] + 1 == dist[w])
                    delta[v] += paths[v] / paths[w] * (1.0 + delta[w]);
            }
            out.values[w] += delta[w];
        }
    }
    // Every unordered pair was counted once from each endpoint.
    for (double& x : out.values) x *= 0.5;
    return out;
}

CentralityVector uniform_centrality(const Graph& g) {
    return {CentralityKind::uniform, std::vector<double>(g.vertex_count(), 1.0)};
}

CentralityVector compute_centrality(const Graph& g, CentralityKind kind) {
    switch (kind) {
        case CentralityKind::degree: return degree_centrality(g);
        case CentralityKind::closeness: return closeness_centrality(g);
        case CentralityKind::betweenness: return betweenness_centrality(g);
        case CentralityKind::uniform: return uniform_centrality(g);
    }
    throw std::invalid_argument("unknown centrality kind");
}

MassVector normalize_mass(const CentralityVector& c, double mass_floor) {
    if (!(mass_floor > 0.0 && mass_floor <= 1.0)) throw std::invalid_argument("mass floor must lie in (0, 1]");
    const std::size_t n = c.values.size();
    for (double x : c.values) {
        if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("centrality values must be finite and nonnegative");
    }
    MassVector out{std::vector<double>(n, 1.0)};
    if (n == 0) return out;
    double mean = std::accumulate(c.values.begin(), c.values.end(), 0.0) / static_cast<double>(n);
    if (mean <= 0.0) return out;

    // Find the scale s with mean(max(floor, s * c / mean(c))) == 1. Lifting the
    // low values to the floor and then rescaling would push them back under
    // it, so the floored set and the scale are solved together.
    std::vector<double> ratio(n);
    for (std::size_t i = 0; i < n; ++i) ratio[i] = c.values[i] / mean;
    std::vector<double> sorted = ratio;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> suffix(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

    double scale = 1.0;
    for (std::size_t floored = 0; floored < n; ++floored) {
        double rest = suffix[floored];
        if (rest <= 0.0) continue;
        double s = (static_cast<double>(n) - static_cast<double>(floored) * mass_floor) / rest;
        bool low_ok = floored == 0 || s * sorted[floored - 1] <= mass_floor;
        bool high_ok = s * sorted[floored] >= mass_floor;
        if (low_ok && high_ok) {
            scale = s;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) out.values[i] = std::max(mass_floor, scale * ratio[i]);
    return out;
}

}  // namespace socgrav
