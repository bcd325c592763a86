#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyciso/graph.hpp"

namespace cyciso {

/// Parameters of the pendant-cycle assembly: q copies of the base cycle, each
/// hung by one edge from a connection vertex, a tree on the connections, and
/// a connected r-edge remainder glued at the last connection.
struct SpecialSpec {
    Graph base;        // a cycle on 3 or 4 vertices
    int m = 0;         // target edge count
    int q = 0;         // number of constituents; m+1 = q(k+2) + r for k = |E(base)|
    int r = 0;
    std::vector<std::pair<int, int>> tree_edges;  // tree on constituent ids 0..q-1
    Graph remainder;   // vertex 0 is identified with connection q-1
    std::vector<int> attach;  // attachment vertex inside each base copy

    bool pure() const { return r == 0; }
    void validate() const;  // throws naming the violated clause
};

/// A recognized decomposition of a pure special graph, in host-graph ids.
struct SpecialDecomposition {
    struct Constituent {
        int connection;     // v_i
        VertexSet cycle;    // vertex set of the base-cycle copy
        int attachment;     // w_i, the unique cycle vertex adjacent to v_i
    };
    int q = 0;
    std::vector<Constituent> constituents;
    std::vector<std::pair<int, int>> tree_edges;  // quotient tree on the connections
    VertexSet remainder;  // extra remainder vertices; empty for pure graphs
};

/// Assemble the graph described by the spec. Layout: connections 0..q-1, then
/// the base copies, then any remainder vertices.
Graph build_special(const SpecialSpec& spec);

/// Seeded random spec with the given edge count: uniform quotient tree via a
/// Pruefer sequence, random attachment vertices, and a random small connected
/// remainder. Throws when m admits no q >= 1.
std::pair<SpecialSpec, Graph> random_special(const Graph& base, int m, bool pure, std::uint64_t seed);

/// Accepts exactly the pure special graphs over the given base cycle with
/// q >= 1: the block decomposition must be q base-cycle blocks plus bridges,
/// each cycle block hanging by one edge from a distinct outside connection,
/// and the connections must span the rest of the graph as a tree.
std::optional<SpecialDecomposition> recognize_pure_special(const Graph& g, const Graph& base);

Graph diamond_graph();
bool is_diamond_or_c5(const Graph& g);

/// The prescribed-vertex isolating set of a pure special graph: v plus the
/// connections of every constituent not containing v. Size is always q.
VertexSet prop1_isolating_set(const SpecialDecomposition& dec, const Graph& g, int v);

}  // namespace cyciso
