#pragma once

#include <optional>

#include "cyciso/detect.hpp"
#include "cyciso/graph.hpp"

namespace cyciso {

struct IsolationResult {
    int size = 0;
    VertexSet witness;
    bool exact = true;
};

/// Smallest isolating set by iterative-deepening search, branching on the
/// closed neighbourhood of a witness cycle. Splits into components and strips
/// leaves first. Returns nullopt when a budget is given and the isolation
/// number exceeds it; refuses oversized unbudgeted inputs.
std::optional<IsolationResult> isolation_number(const Graph& g, const CycleFamily& fam,
                                                std::optional<int> budget = std::nullopt);

/// Test oracle: enumerate all k-subsets for k = 0,1,2,... until one isolates.
/// Enforced to graphs with at most 12 vertices.
IsolationResult isolation_number_naive(const Graph& g, const CycleFamily& fam);

}  // namespace cyciso
