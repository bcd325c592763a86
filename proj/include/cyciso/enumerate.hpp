#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyciso/graph.hpp"

namespace cyciso {

/// Minimum of the packed upper-triangle adjacency bits over all vertex
/// relabelings (branch-and-bound over placements). Supports n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// graph6 string of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of connected graphs with
/// 1 <= n <= max_n, ordered by n and then by canonical code. max_n <= 7;
/// larger censuses should read externally enumerated graph6 files.
std::vector<Graph> enumerate_connected(int max_n);

}  // namespace cyciso
