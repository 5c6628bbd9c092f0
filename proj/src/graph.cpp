#include "socgrav/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "socgrav/errors.hpp"

namespace socgrav {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (vertex_count > std::numeric_limits<VertexId>::max() - 1)
        throw std::invalid_argument("graph: too many vertices");
    if (!labels.empty() && labels.size() != vertex_count)
        throw std::invalid_argument("graph: label count does not match vertex count");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size());
    std::vector<std::size_t> degree(vertex_count, 0);
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        Edge n{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(edge_key(n.u, n.v)).second) continue;
        edges_.push_back(n);
        ++degree[n.u];
        ++degree[n.v];
    }

    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);

    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    }
    labels_ = std::move(labels);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("graph: vertex id out of range");
    return std::span<const VertexId>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<VertexId>(names.size()));
        if (inserted) names.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            if (i >= line.size() || line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            tokens.emplace_back(line, start, i - start);
        }
        if (tokens.empty()) continue;
        if (tokens.size() > 2)
            throw ParseError("expected one or two vertex tokens, found " + std::to_string(tokens.size()), line_no);
        if (tokens.size() == 1) {
            intern(tokens[0]);
            continue;
        }
        if (tokens[0] == tokens[1]) throw ParseError("self-loop at vertex '" + tokens[0] + "'", line_no);
        VertexId u = intern(tokens[0]);
        VertexId v = intern(tokens[1]);
        if (seen.insert(edge_key(std::min(u, v), std::max(u, v))).second) edges.push_back({u, v});
    }
    if (in.bad()) throw ParseError("read failure", line_no);
    std::size_t n = names.size();
    return Graph(n, edges, std::move(names));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    for (const auto& name : g.labels()) {
        bool bad = name.empty() || name.front() == '#' ||
                   std::any_of(name.begin(), name.end(), [](char c) { return is_space(c) || c == '\n'; });
        if (bad) throw std::invalid_argument("edge list: label '" + name + "' is not a valid token");
    }
    // Emit declaration lines where needed so that re-parsing assigns the
    // same ids in first-appearance order.
    std::ostringstream out;
    std::vector<bool> seen(g.vertex_count(), false);
    VertexId next = 0;
    auto first_unseen = [&] {
        while (next < g.vertex_count() && seen[next]) ++next;
        return next;
    };
    auto declare = [&](VertexId w) {
        out << g.label(w) << '\n';
        seen[w] = true;
    };
    for (const Edge& e : g.edges()) {
        const bool new_u = !seen[e.u], new_v = !seen[e.v];
        if (new_u)
            while (first_unseen() < e.u) declare(next);
        if (new_v) {
            if (new_u) seen[e.u] = true;
            if (first_unseen() < e.v) {
                // Gap between the endpoints: u must be declared before it.
                if (new_u) {
                    seen[e.u] = false;
                    declare(e.u);
                }
                while (first_unseen() < e.v) declare(next);
            }
        }
        seen[e.u] = seen[e.v] = true;
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) out << g.label(v) << '\n';
    return out.str();
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("JSON graph needs a \"vertices\" array", 0);

    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (v.is_string())
            names.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            names.push_back(std::to_string(v.get<long long>()));
        else
            throw ParseError("vertex names must be strings", 0);
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
        std::size_t index = 0;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError("edge " + std::to_string(index) + " must be a pair of vertex indices", 0);
            auto u = e[0].get<std::uint64_t>();
            auto v = e[1].get<std::uint64_t>();
            if (u >= names.size() || v >= names.size())
                throw ParseError("edge " + std::to_string(index) + " refers to a missing vertex", 0);
            if (u == v) throw ParseError("self-loop at vertex '" + names[u] + "'", 0);
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            ++index;
        }
    }
    std::size_t n = names.size();
    return Graph(n, edges, std::move(names));
}

std::string serialize_json_graph(const Graph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.labels();
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_graph(text);
    return parse_edge_list(text);
}

DistanceVector bfs_distances(const Graph& g, VertexId source) {
    if (source >= g.vertex_count())
        throw std::invalid_argument("bfs: source " + std::to_string(source) + " out of range");
    DistanceVector out{source, std::vector<std::uint32_t>(g.vertex_count(), kUnreachable)};
    std::queue<VertexId> frontier;
    out.dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop();
        for (VertexId w : g.neighbors(v)) {
            if (out.dist[w] != kUnreachable) continue;
            out.dist[w] = out.dist[v] + 1;
            frontier.push(w);
        }
    }
    return out;
}

Components connected_components(const Graph& g) {
    Components out;
    out.label.assign(g.vertex_count(), kUnreachable);
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (out.label[root] != kUnreachable) continue;
        out.label[root] = out.count;
        stack.push_back(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (out.label[w] != kUnreachable) continue;
                out.label[w] = out.count;
                stack.push_back(w);
            }
        }
        ++out.count;
    }
    return out;
}

}  // namespace socgrav
