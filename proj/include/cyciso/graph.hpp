#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyciso {

/// Sorted duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    static VertexSet of(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);

/// Immutable simple undirected graph on vertex ids 0..n-1 with sorted
/// adjacency lists. Construction validates no self-loops; edges are
/// deduplicated and stored symmetrically.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph star(int leaves);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    bool connected() const;

    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v, const char* what) const;
};

/// An induced subgraph together with the map from its dense local ids back
/// to the ids of the graph it was cut from.
struct Subgraph {
    Graph graph;
    std::vector<int> origin;  // local id -> parent id

    int to_parent(int local) const;
    VertexSet to_parent(const VertexSet& locals) const;
    int to_local(int parent) const;  // -1 when absent
};

/// origin map of a view-of-a-view, expressed in the outermost graph's ids
std::vector<int> compose_origin(const std::vector<int>& outer, const std::vector<int>& inner);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, int v);

Subgraph delete_vertices(const Graph& g, const VertexSet& x);
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components as induced subgraphs, ordered by smallest original id.
std::vector<Subgraph> components(const Graph& g);

/// Vertex of maximum degree, smallest id on ties. Throws on the empty graph.
int max_degree_vertex(const Graph& g);

struct BlockDecomposition {
    struct Block {
        VertexSet vertices;
        bool is_bridge;  // block consisting of a single edge
    };
    std::vector<Block> blocks;
    VertexSet cut_vertices;
};

/// Standard biconnected decomposition. Every edge lies in exactly one block;
/// isolated vertices belong to no block.
BlockDecomposition blocks(const Graph& g);

/// Exhaustive isomorphism test for graphs with at most 10 vertices.
bool is_isomorphic_small(const Graph& g, const Graph& h);

}  // namespace cyciso
