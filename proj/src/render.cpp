#include "socgrav/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "socgrav/errors.hpp"

namespace socgrav {

namespace {

std::uint8_t channel(double fraction) {
    // Round half up; fraction is already clamped to [0, 1].
    return static_cast<std::uint8_t>(std::floor(255.0 * fraction + 0.5));
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Color color_for(double value, double lo, double hi) {
    if (!(hi > lo)) return {255, 0, 0};
    double t = std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
    if (std::isnan(t)) t = 0.0;
    return {channel(t), 0, channel(1.0 - t)};
}

std::vector<Color> spectrum_colors(std::span<const double> values) {
    std::vector<Color> out;
    if (values.empty()) return out;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    out.reserve(values.size());
    for (double v : values) out.push_back(color_for(v, *lo, *hi));
    return out;
}

std::string to_hex(Color c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string render_svg(const Graph& g, std::span<const Vec2> positions, std::span<const Color> colors,
                       const std::vector<ArcEdge>* arcs, const SvgStyle& style) {
    const std::size_t n = g.vertex_count();
    if (positions.size() != n) throw RenderError("render: position count differs from vertex count");
    if (!colors.empty() && colors.size() != n) throw RenderError("render: color count differs from vertex count");
    if (arcs && arcs->size() != g.edge_count()) throw RenderError("render: arc count differs from edge count");
    for (VertexId v = 0; v < n; ++v) {
        if (!is_finite(positions[v]))
            throw RenderError("render: vertex '" + g.label(v) + "' has a non-finite coordinate");
    }

    const double pad = 0.1 * style.k;
    const double radius = style.vertex_radius.value_or(0.05 * style.k);
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    if (n > 0) {
        xmin = ymin = std::numeric_limits<double>::infinity();
        xmax = ymax = -std::numeric_limits<double>::infinity();
        auto include = [&](Vec2 p) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        };
        for (Vec2 p : positions) include(p);
        if (arcs) {
            for (const ArcEdge& a : *arcs) {
                if (!is_finite(a.control))
                    throw RenderError("render: edge '" + g.label(a.edge.u) + "-" + g.label(a.edge.v) +
                                      "' has a non-finite control point");
                include(a.control);
            }
        }
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(xmin - pad) << ' '
        << num(-ymax - pad) << ' ' << num(xmax - xmin + 2 * pad) << ' ' << num(ymax - ymin + 2 * pad) << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";

    out << "<g fill=\"none\" stroke=\"" << escape_xml(style.edge_color) << "\" stroke-width=\""
        << num(style.edge_width) << "\">\n";
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Vec2 a = positions[edges[i].u];
        Vec2 b = positions[edges[i].v];
        const CircularArc* arc = arcs ? std::get_if<CircularArc>(&(*arcs)[i].geometry) : nullptr;
        if (arc) {
            out << "<path d=\"M " << num(arc->start.x) << ' ' << num(arc->start.y) << " A " << num(arc->radius)
                << ' ' << num(arc->radius) << " 0 " << (arc->large ? 1 : 0) << ' ' << (arc->ccw ? 1 : 0) << ' '
                << num(arc->end.x) << ' ' << num(arc->end.y) << "\"/>\n";
        } else {
            out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
                << num(b.y) << "\"/>\n";
        }
    }
    out << "</g>\n";

    out << "<g stroke=\"#000000\" stroke-width=\"" << num(0.1 * radius) << "\">\n";
    for (VertexId v = 0; v < n; ++v) {
        Color c = colors.empty() ? Color{255, 0, 0} : colors[v];
        out << "<circle cx=\"" << num(positions[v].x) << "\" cy=\"" << num(positions[v].y) << "\" r=\""
            << num(radius) << "\" fill=\"" << to_hex(c) << "\"/>\n";
    }
    out << "</g>\n";
    out << "</g>\n";

    if (style.show_labels && n > 0) {
        out << "<g font-family=\"sans-serif\" font-size=\"" << num(2.0 * radius) << "\">\n";
        for (VertexId v = 0; v < n; ++v) {
            out << "<text x=\"" << num(positions[v].x + 1.2 * radius) << "\" y=\""
                << num(-positions[v].y - 1.2 * radius) << "\">" << escape_xml(g.label(v)) << "</text>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace socgrav
