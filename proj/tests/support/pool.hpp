#pragma once

#include <cstdint>
#include <vector>

#include "evc/graph.hpp"

namespace pool {

/// Graph on ids 0..n-1 (labels "0".."n-1") from adjacency bitmasks.
evc::Graph from_masks(const std::vector<std::uint64_t>& adj);

/// One representative per isomorphism class of connected graphs with
/// min_n <= n <= max_n vertices (max_n <= 8).
std::vector<evc::Graph> connected_graphs(int min_n, int max_n);

/// Seeded random connected graphs with 2 <= n <= max_n.
std::vector<evc::Graph> random_graphs(int count, int max_n, std::uint64_t seed);

/// Seeded random biconnected chordal graphs with 3 <= n <= max_n.
std::vector<evc::Graph> biconnected_chordal(int count, int max_n, std::uint64_t seed);

}  // namespace pool
