#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socgrav/graph.hpp"
#include "socgrav/lombardi.hpp"
#include "socgrav/vec2.hpp"

namespace socgrav {

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Color&, const Color&) = default;
};

/// Blue at lo, red at hi, linear in RGB between (so the midpoint is purple).
/// Values outside [lo, hi] are clamped; lo == hi yields red.
Color color_for(double value, double lo, double hi);

std::vector<Color> spectrum_colors(std::span<const double> values);

std::string to_hex(Color c);

struct SvgStyle {
    double k = 80.0;
    std::optional<double> vertex_radius;  // defaults to 0.05 k
    double edge_width = 1.0;
    std::string edge_color = "#555555";
    bool show_labels = false;
};

/// Standalone SVG document. Drawing coordinates are y-up; a group transform
/// flips them for display. `arcs`, when given, replaces the straight edges and
/// must hold one entry per edge. Throws RenderError on a non-finite coordinate.
std::string render_svg(const Graph& g, std::span<const Vec2> positions, std::span<const Color> colors,
                       const std::vector<ArcEdge>* arcs = nullptr, const SvgStyle& style = {});

}  // namespace socgrav
