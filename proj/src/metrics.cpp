#include "socgrav/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace socgrav {

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool open_segments_meet(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 == 0 && o2 == 0) {
        // Collinear: overlap of positive length along the dominant axis.
        bool use_x = std::abs(b.x - a.x) + std::abs(d.x - c.x) >= std::abs(b.y - a.y) + std::abs(d.y - c.y);
        auto coord = [use_x](Vec2 p) { return use_x ? p.x : p.y; };
        double lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
        double lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    // A zero orientation here puts the meeting point at an endpoint, which
    // is outside the open segment it belongs to.
    return o1 * o2 < 0 && o3 * o4 < 0;
}

void require_size(const Graph& g, std::span<const Vec2> positions) {
    if (positions.size() != g.vertex_count())
        throw std::invalid_argument("metrics: position count differs from vertex count");
}

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> rank(x.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
        double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t m = i; m <= j; ++m) rank[idx[m]] = r;
        i = j + 1;
    }
    return rank;
}

}  // namespace

std::size_t count_crossings(const Graph& g, std::span<const Vec2> positions) {
    require_size(g, positions);
    auto edges = g.edges();
    std::size_t count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            if (open_segments_meet(positions[e.u], positions[e.v], positions[f.u], positions[f.v])) ++count;
        }
    }
    return count;
}

double min_angular_resolution(const Graph& g, std::span<const Vec2> positions) {
    require_size(g, positions);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double best = two_pi;
    std::vector<double> angles;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        if (nb.size() < 2) continue;
        angles.clear();
        for (VertexId u : nb) {
            Vec2 d = positions[u] - positions[v];
            angles.push_back(std::atan2(d.y, d.x));
        }
        std::sort(angles.begin(), angles.end());
        for (std::size_t i = 1; i < angles.size(); ++i) best = std::min(best, angles[i] - angles[i - 1]);
        best = std::min(best, two_pi - (angles.back() - angles.front()));
    }
    return best;
}

EdgeLengthStats edge_length_stats(const Graph& g, std::span<const Vec2> positions) {
    require_size(g, positions);
    if (g.edge_count() == 0) throw std::invalid_argument("edge_length_stats: graph has no edges");
    std::vector<double> len;
    len.reserve(g.edge_count());
    for (const Edge& e : g.edges()) len.push_back(distance(positions[e.u], positions[e.v]));
    double n = static_cast<double>(len.size());
    double mean = std::accumulate(len.begin(), len.end(), 0.0) / n;
    double var = 0.0;
    for (double l : len) var += (l - mean) * (l - mean);
    var /= n;
    return {mean, mean > 0.0 ? std::sqrt(var) / mean : 0.0};
}

double bounding_area(std::span<const Vec2> positions) {
    if (positions.empty()) throw std::invalid_argument("bounding_area: no positions");
    auto [xmin, xmax] = std::minmax_element(positions.begin(), positions.end(),
                                            [](Vec2 a, Vec2 b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(positions.begin(), positions.end(),
                                            [](Vec2 a, Vec2 b) { return a.y < b.y; });
    return (xmax->x - xmin->x) * (ymax->y - ymin->y);
}

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("spearman: sample sizes differ");
    if (a.size() < 3) throw std::invalid_argument("spearman: needs at least 3 samples");
    auto ra = average_ranks(a);
    auto rb = average_ranks(b);
    double n = static_cast<double>(a.size());
    double mean = (n + 1.0) / 2.0;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        double da = ra[i] - mean, db = rb[i] - mean;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double centrality_radius_correlation(std::span<const double> centrality, std::span<const Vec2> positions) {
    if (centrality.size() != positions.size())
        throw std::invalid_argument("centrality_radius_correlation: size mismatch");
    if (positions.size() < 3) throw std::invalid_argument("centrality_radius_correlation: needs at least 3 vertices");
    Vec2 xi{};
    for (Vec2 p : positions) xi += p;
    xi = xi * (1.0 / static_cast<double>(positions.size()));
    std::vector<double> radius;
    radius.reserve(positions.size());
    for (Vec2 p : positions) radius.push_back(distance(p, xi));
    return spearman(centrality, radius);
}

DrawingMetrics compute_metrics(const Graph& g, std::span<const Vec2> positions, const CentralityVector& c) {
    require_size(g, positions);
    DrawingMetrics m;
    m.crossings = count_crossings(g, positions);
    m.min_angle = min_angular_resolution(g, positions);
    if (g.edge_count() > 0) {
        auto stats = edge_length_stats(g, positions);
        m.edge_len_mean = stats.mean;
        m.edge_len_cv = stats.cv;
    }
    if (!positions.empty()) m.bbox_area = bounding_area(positions);
    if (positions.size() >= 3 && c.values.size() == positions.size())
        m.centrality_radius_rho = centrality_radius_correlation(c.values, positions);
    return m;
}

std::string to_json(const DrawingMetrics& m) {
    auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
    nlohmann::json j;
    j["crossings"] = m.crossings;
    j["min_angle"] = m.min_angle;
    j["edge_len_mean"] = opt(m.edge_len_mean);
    j["edge_len_cv"] = opt(m.edge_len_cv);
    j["bbox_area"] = m.bbox_area;
    j["centrality_radius_rho"] = opt(m.centrality_radius_rho);
    return j.dump();
}

}  // namespace socgrav
