#pragma once

// Test-only oracles, deliberately independent of the library's detection and
// search paths: plain DFS cycle enumeration and small named graphs.

#include <vector>

#include "cyciso/detect.hpp"
#include "cyciso/graph.hpp"

namespace oracles {

/// Every simple cycle of g as a vertex list (each cycle once, up to rotation
/// and direction: smallest vertex first, smaller second neighbour first).
std::vector<std::vector<int>> all_cycles(const cyciso::Graph& g);

/// Family membership decided by enumerating every cycle.
bool contains_family_naive(const cyciso::Graph& g, const cyciso::CycleFamily& fam);

/// Isolation test through the naive detector.
bool is_isolating_naive(const cyciso::Graph& g, const cyciso::CycleFamily& fam,
                        const cyciso::VertexSet& d);

cyciso::Graph petersen();

/// Disjoint union with b's ids shifted past a's.
cyciso::Graph disjoint_union(const cyciso::Graph& a, const cyciso::Graph& b);

/// All labeled graphs on n vertices (n <= 6), as edge subsets of the
/// upper-triangle in column order.
std::vector<cyciso::Graph> all_labeled_graphs(int n);

/// Cached enumerate_connected(max_n), shared across test cases.
const std::vector<cyciso::Graph>& connected_up_to(int max_n);

}  // namespace oracles
