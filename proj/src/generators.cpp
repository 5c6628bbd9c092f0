#include "socgrav/generators.hpp"

#include <random>
#include <stdexcept>

#include "random.hpp"

namespace socgrav {

std::vector<Edge> decode_pruefer(std::span<const VertexId> sequence) {
    const std::size_t n = sequence.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (VertexId x : sequence) {
        if (x >= n) throw std::invalid_argument("pruefer: label out of range");
        ++degree[x];
    }
    // Linear-time decoding: `leaf` is the smallest current leaf, `ptr` the
    // scan position for the next candidate.
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    for (VertexId x : sequence) {
        edges.push_back({static_cast<VertexId>(leaf), x});
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1)});
    return edges;
}

namespace {

void append_tree(std::size_t n, std::mt19937_64& rng, VertexId offset, std::vector<Edge>& edges) {
    if (n < 2) return;
    std::vector<VertexId> seq(n - 2);
    for (auto& x : seq) x = static_cast<VertexId>(detail::bounded(rng, n));
    for (Edge e : decode_pruefer(seq)) edges.push_back({e.u + offset, e.v + offset});
}

}  // namespace

Graph generate_random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    append_tree(n, rng, 0, edges);
    return Graph(n, edges);
}

Graph generate_forest(std::span<const std::size_t> sizes, std::uint64_t seed) {
    if (sizes.empty()) throw std::invalid_argument("forest needs at least one component");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::size_t total = 0;
    for (std::size_t size : sizes) {
        if (size == 0) throw std::invalid_argument("forest component sizes must be at least 1");
        append_tree(size, rng, static_cast<VertexId>(total), edges);
        total += size;
    }
    return Graph(total, edges);
}

}  // namespace socgrav
