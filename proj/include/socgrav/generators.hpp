#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "socgrav/graph.hpp"

namespace socgrav {

/// Uniform random labelled tree on n vertices, decoded from a random Prüfer
/// sequence. Deterministic per seed. Throws std::invalid_argument if n == 0.
Graph generate_random_tree(std::size_t n, std::uint64_t seed);

/// Disjoint union of random trees with the given sizes; tree i occupies a
/// contiguous id range following tree i-1.
Graph generate_forest(std::span<const std::size_t> sizes, std::uint64_t seed);

// Prüfer decoding; every entry of `sequence` must be < sequence.size() + 2.
std::vector<Edge> decode_pruefer(std::span<const VertexId> sequence);

}  // namespace socgrav
