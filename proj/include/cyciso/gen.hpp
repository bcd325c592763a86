#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cyciso/graph.hpp"

namespace cyciso {

/// Uniformly random labeled tree on n vertices (Pruefer decoding).
std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng);

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability extra_p.
Graph random_connected_graph(int n, double extra_p, std::mt19937_64& rng);

}  // namespace cyciso
