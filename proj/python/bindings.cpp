// Python bindings. Points cross the boundary as (x, y) tuples, drawings as
// lists of them, metrics and arcs as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socgrav/errors.hpp"
#include "socgrav/generators.hpp"
#include "socgrav/pipeline.hpp"

namespace py = pybind11;
using namespace socgrav;

namespace {

py::tuple point(Vec2 p) { return py::make_tuple(p.x, p.y); }

py::list points(std::span<const Vec2> ps) {
    py::list out;
    for (Vec2 p : ps) out.append(point(p));
    return out;
}

Vec2 to_vec2(py::handle h) {
    auto s = py::reinterpret_borrow<py::sequence>(h);
    if (s.size() != 2) throw py::value_error("a point must have exactly two coordinates");
    return {s[0].cast<double>(), s[1].cast<double>()};
}

std::vector<Vec2> to_points(const py::sequence& seq) {
    std::vector<Vec2> out;
    out.reserve(seq.size());
    for (auto item : seq) out.push_back(to_vec2(item));
    return out;
}

py::object optional_float(const std::optional<double>& v) {
    return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict metrics_dict(const DrawingMetrics& m) {
    py::dict d;
    d["crossings"] = m.crossings;
    d["min_angle"] = m.min_angle;
    d["edge_len_mean"] = optional_float(m.edge_len_mean);
    d["edge_len_cv"] = optional_float(m.edge_len_cv);
    d["bbox_area"] = m.bbox_area;
    d["centrality_radius_rho"] = optional_float(m.centrality_radius_rho);
    return d;
}

py::dict geometry_dict(const ArcGeometry& geom) {
    py::dict d;
    if (const auto* s = std::get_if<StraightSegment>(&geom)) {
        d["kind"] = "segment";
        d["start"] = point(s->start);
        d["end"] = point(s->end);
    } else {
        const auto& a = std::get<CircularArc>(geom);
        d["kind"] = "arc";
        d["center"] = point(a.center);
        d["radius"] = a.radius;
        d["ccw"] = a.ccw;
        d["large"] = a.large;
        d["start"] = point(a.start);
        d["end"] = point(a.end);
    }
    return d;
}

py::list arcs_list(const std::vector<ArcEdge>& arcs) {
    py::list out;
    for (const ArcEdge& a : arcs) {
        py::dict d = geometry_dict(a.geometry);
        d["edge"] = py::make_tuple(a.edge.u, a.edge.v);
        d["control"] = point(a.control);
        out.append(d);
    }
    return out;
}

MassVector masses(const py::object& mass, const Graph& g) {
    if (mass.is_none()) return normalize_mass(degree_centrality(g));
    MassVector m{mass.cast<std::vector<double>>()};
    if (m.values.size() != g.vertex_count()) throw py::value_error("need one mass per vertex");
    return m;
}

LayoutConfig config_or_default(const py::object& config) {
    return config.is_none() ? LayoutConfig{} : config.cast<LayoutConfig>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Force-directed graph layout with centrality-weighted gravity";

    // Later registrations are tried first, so subclasses come after Error.
    auto base = py::register_exception<Error>(m, "SocgravError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<RenderError>(m, "RenderError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                         std::vector<std::string> labels) {
                 std::vector<Edge> es;
                 for (auto [u, v] : edges) es.push_back({u, v});
                 return Graph(n, es, std::move(labels));
             }),
             py::arg("vertex_count"), py::arg("edges") = std::vector<std::pair<VertexId, VertexId>>{},
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   py::list out;
                                   for (Edge e : g.edges()) out.append(py::make_tuple(e.u, e.v));
                                   return out;
                               })
        .def_property_readonly("labels", &Graph::labels)
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 auto nb = g.neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__len__", &Graph::vertex_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges>";
        });

    m.def("parse_edge_list", py::overload_cast<std::string_view>(&parse_edge_list), py::arg("text"));
    m.def("parse_json_graph", &parse_json_graph, py::arg("text"));
    m.def("parse_graph", &parse_graph, py::arg("text"), "Edge list or JSON, detected from the first character");
    m.def("serialize_edge_list", &serialize_edge_list);
    m.def("serialize_json_graph", &serialize_json_graph);
    m.def(
        "bfs_distances",
        [](const Graph& g, VertexId source) {
            py::list out;
            for (auto d : bfs_distances(g, source).dist)
                out.append(d == kUnreachable ? py::object(py::none()) : py::object(py::int_(d)));
            return out;
        },
        py::arg("graph"), py::arg("source"), "Hop counts from source; None for unreachable vertices");
    m.def(
        "connected_components",
        [](const Graph& g) {
            auto c = connected_components(g);
            return py::make_tuple(c.count, c.label);
        },
        "Returns (count, per-vertex component label)");

    m.def(
        "centrality",
        [](const Graph& g, const std::string& kind) {
            return compute_centrality(g, centrality_kind_from_string(kind)).values;
        },
        py::arg("graph"), py::arg("kind") = "degree", "kind: degree, closeness, betweenness or uniform");
    m.def(
        "normalize_mass",
        [](std::vector<double> values, double floor) {
            return normalize_mass(CentralityVector{CentralityKind::uniform, std::move(values)}, floor).values;
        },
        py::arg("values"), py::arg("floor") = kDefaultMassFloor);

    py::class_<LayoutConfig>(m, "LayoutConfig")
        .def(py::init([](py::kwargs kw) {
            LayoutConfig c;
            py::object self = py::cast(c);
            for (auto [key, value] : kw) py::setattr(self, key, value);
            return self.cast<LayoutConfig>();
        }))
        .def_readwrite("k", &LayoutConfig::k)
        .def_readwrite("i_max", &LayoutConfig::i_max)
        .def_readwrite("sigma", &LayoutConfig::sigma)
        .def_readwrite("gamma_max", &LayoutConfig::gamma_max)
        .def_property(
            "schedule", [](const LayoutConfig& c) { return std::string(to_string(c.schedule)); },
            [](LayoutConfig& c, const std::string& s) { c.schedule = schedule_kind_from_string(s); })
        .def_readwrite("gamma_constant", &LayoutConfig::gamma_constant)
        .def_readwrite("block_len", &LayoutConfig::block_len)
        .def_readwrite("gamma_step", &LayoutConfig::gamma_step)
        .def_readwrite("equilibrium_eps", &LayoutConfig::equilibrium_eps)
        .def_readwrite("max_iterations", &LayoutConfig::max_iterations)
        .def_readwrite("seed", &LayoutConfig::seed)
        .def_readwrite("threads", &LayoutConfig::threads)
        .def("validate", &LayoutConfig::validate)
        .def("terminal_gamma", &LayoutConfig::terminal_gamma)
        .def("__repr__", [](const LayoutConfig& c) {
            return "<LayoutConfig k=" + std::to_string(c.k) + " schedule=" + std::string(to_string(c.schedule)) +
                   " seed=" + std::to_string(c.seed) + ">";
        });

    m.def(
        "initialize_positions",
        [](const Graph& g, std::uint64_t seed, double k) { return points(initialize_positions(g, seed, k)); },
        py::arg("graph"), py::arg("seed") = 0, py::arg("k") = 80.0);
    m.def(
        "run_layout",
        [](const Graph& g, const py::object& mass, const py::object& config, const py::object& initial) {
            MassVector mv = masses(mass, g);
            LayoutConfig c = config_or_default(config);
            std::vector<Vec2> result;
            if (initial.is_none()) {
                py::gil_scoped_release unlocked;
                result = run_layout(g, mv, c);
            } else {
                auto start = to_points(initial.cast<py::sequence>());
                py::gil_scoped_release unlocked;
                result = run_layout_from(g, mv, c, std::move(start)).positions;
            }
            return points(result);
        },
        py::arg("graph"), py::arg("mass") = py::none(), py::arg("config") = py::none(),
        py::arg("initial") = py::none(),
        "Lays out the graph. mass defaults to normalized degree centrality.");

    m.def("count_crossings",
          [](const Graph& g, const py::sequence& p) { return count_crossings(g, to_points(p)); });
    m.def("min_angular_resolution",
          [](const Graph& g, const py::sequence& p) { return min_angular_resolution(g, to_points(p)); });
    m.def("edge_length_stats", [](const Graph& g, const py::sequence& p) {
        auto s = edge_length_stats(g, to_points(p));
        return py::make_tuple(s.mean, s.cv);
    });
    m.def("bounding_area", [](const py::sequence& p) { return bounding_area(to_points(p)); });
    m.def("spearman", [](const std::vector<double>& a, const std::vector<double>& b) { return spearman(a, b); });
    m.def("centrality_radius_correlation", [](const std::vector<double>& c, const py::sequence& p) {
        return centrality_radius_correlation(c, to_points(p));
    });
    m.def(
        "compute_metrics",
        [](const Graph& g, const py::sequence& p, const std::string& kind) {
            return metrics_dict(compute_metrics(g, to_points(p), compute_centrality(g, centrality_kind_from_string(kind))));
        },
        py::arg("graph"), py::arg("positions"), py::arg("centrality") = "degree");

    m.def(
        "fit_arc",
        [](const py::sequence& pu, const py::sequence& pv, const py::sequence& pd, double k) {
            return geometry_dict(fit_arc(to_vec2(pu), to_vec2(pv), to_vec2(pd), k));
        },
        py::arg("pu"), py::arg("pv"), py::arg("pd"), py::arg("k") = 80.0);
    m.def(
        "bend_edges",
        [](const Graph& g, const py::sequence& positions, const py::object& config, double floor) {
            auto r = bend_edges(g, to_points(positions), config_or_default(config), floor);
            return arcs_list(r.arcs);
        },
        py::arg("graph"), py::arg("positions"), py::arg("config") = py::none(),
        py::arg("mass_floor") = kDefaultMassFloor, "Bends the edges of a drawing into circular arcs");
    m.def(
        "layout_lombardi",
        [](const Graph& g, const py::object& mass, const py::object& config) {
            auto r = layout_lombardi(g, masses(mass, g), config_or_default(config));
            return py::make_tuple(points(r.positions), arcs_list(r.arcs));
        },
        py::arg("graph"), py::arg("mass") = py::none(), py::arg("config") = py::none(),
        "Returns (positions, arcs)");

    m.def(
        "render_svg",
        [](const Graph& g, const py::sequence& positions, const py::object& values, bool labels, double k) {
            std::vector<Color> colors;
            if (!values.is_none()) colors = spectrum_colors(values.cast<std::vector<double>>());
            SvgStyle style;
            style.k = k;
            style.show_labels = labels;
            return render_svg(g, to_points(positions), colors, nullptr, style);
        },
        py::arg("graph"), py::arg("positions"), py::arg("values") = py::none(), py::arg("labels") = false,
        py::arg("k") = 80.0, "Straight-edge SVG; vertices colored blue to red by values");
    m.def(
        "color_for",
        [](double value, double lo, double hi) { return to_hex(color_for(value, lo, hi)); },
        py::arg("value"), py::arg("lo"), py::arg("hi"));

    m.def("generate_random_tree", &generate_random_tree, py::arg("n"), py::arg("seed") = 0);
    m.def(
        "generate_forest",
        [](const std::vector<std::size_t>& sizes, std::uint64_t seed) { return generate_forest(sizes, seed); },
        py::arg("sizes"), py::arg("seed") = 0);

    m.def(
        "run_pipeline",
        [](const Graph& g, const std::string& centrality, const py::object& config, double mass_floor,
           bool lombardi, bool labels) {
            PipelineOptions opts;
            opts.layout = config_or_default(config);
            opts.centrality = centrality_kind_from_string(centrality);
            opts.mass_floor = mass_floor;
            opts.lombardi = lombardi;
            opts.show_labels = labels;
            PipelineResult r;
            {
                py::gil_scoped_release unlocked;
                r = run_pipeline(g, opts);
            }
            py::dict d;
            d["centrality"] = r.centrality.values;
            d["mass"] = r.mass.values;
            d["positions"] = points(r.positions);
            d["arcs"] = arcs_list(r.arcs);
            d["metrics"] = metrics_dict(r.metrics);
            d["svg"] = pipeline_svg(g, r, opts);
            d["report"] = metrics_report_json(r.metrics, opts);
            return d;
        },
        py::arg("graph"), py::arg("centrality") = "degree", py::arg("config") = py::none(),
        py::arg("mass_floor") = kDefaultMassFloor, py::arg("lombardi") = false, py::arg("labels") = false,
        "Centrality, layout, optional arcs, metrics and SVG in one call");
}
