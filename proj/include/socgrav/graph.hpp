#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace socgrav {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with dense vertex ids.
///
/// Edges are stored normalized (u < v) in insertion order with duplicates
/// removed; neighbor lists are sorted ascending so every traversal is
/// deterministic. Instances are immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on a self-loop or an out-of-range
    /// endpoint. Duplicate edges (in either orientation) are collapsed.
    /// `labels` must be empty or have exactly `vertex_count` entries;
    /// when empty, vertices are labelled by their decimal id.
    Graph(std::size_t vertex_count, std::span<const Edge> edges,
          std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    std::size_t max_degree() const noexcept;
    bool has_edge(VertexId u, VertexId v) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;  // CSR, size vertex_count + 1
    std::vector<VertexId> adjacency_;
    std::vector<std::string> labels_;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct DistanceVector {
    VertexId source = 0;
    std::vector<std::uint32_t> dist;  // hop counts, kUnreachable when disconnected

    bool reachable(VertexId v) const { return dist.at(v) != kUnreachable; }
};

// Edge-list text: one "a b" edge or one "a" vertex declaration per line;
// '#' starts a comment. Vertex ids follow first appearance of each token.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// JSON: {"vertices": [names...], "edges": [[i, j], ...]}.
Graph parse_json_graph(std::string_view text);
std::string serialize_json_graph(const Graph& g);

// Chooses the JSON reader when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);

DistanceVector bfs_distances(const Graph& g, VertexId source);

struct Components {
    std::vector<std::uint32_t> label;  // per vertex, 0..count-1 in order of lowest member id
    std::uint32_t count = 0;
};

Components connected_components(const Graph& g);

}  // namespace socgrav
