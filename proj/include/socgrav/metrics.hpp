#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "socgrav/centrality.hpp"
#include "socgrav/graph.hpp"
#include "socgrav/vec2.hpp"

namespace socgrav {

/// Drawing-quality summary. Optional fields are empty when the quantity is
/// undefined for the input (no edges, or fewer than three vertices); they
/// serialize as JSON null.
struct DrawingMetrics {
    std::size_t crossings = 0;
    double min_angle = 0.0;
    std::optional<double> edge_len_mean;
    std::optional<double> edge_len_cv;
    double bbox_area = 0.0;
    std::optional<double> centrality_radius_rho;
};

struct EdgeLengthStats {
    double mean = 0.0;
    double cv = 0.0;  // population standard deviation / mean
};

// Non-adjacent edge pairs whose open straight segments share a point.
std::size_t count_crossings(const Graph& g, std::span<const Vec2> positions);

double min_angular_resolution(const Graph& g, std::span<const Vec2> positions);

EdgeLengthStats edge_length_stats(const Graph& g, std::span<const Vec2> positions);

double bounding_area(std::span<const Vec2> positions);

/// Spearman rank correlation between centrality and distance to the centroid,
/// with average ranks for ties. Returns 0 when either side has no variance.
double centrality_radius_correlation(std::span<const double> centrality, std::span<const Vec2> positions);

// Spearman correlation of two equally long samples (ties averaged).
double spearman(std::span<const double> a, std::span<const double> b);

DrawingMetrics compute_metrics(const Graph& g, std::span<const Vec2> positions, const CentralityVector& c);

std::string to_json(const DrawingMetrics& m);

}  // namespace socgrav
