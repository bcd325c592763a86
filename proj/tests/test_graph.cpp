#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cyciso/graph.hpp"
#include "cyciso/special.hpp"
#include "oracles.hpp"

using namespace cyciso;

TEST_CASE("vertex set basics") {
    VertexSet s{3, 1, 2, 1};
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK(!s.contains(0));
    s.insert(0);
    CHECK(s.ids() == std::vector<int>{0, 1, 2, 3});
    s.erase(2);
    CHECK(s.ids() == std::vector<int>{0, 1, 3});
    CHECK(set_union(VertexSet{1, 2}, VertexSet{2, 5}).ids() == std::vector<int>{1, 2, 5});
    CHECK(set_difference(VertexSet{1, 2, 5}, VertexSet{2}).ids() == std::vector<int>{1, 5});
    CHECK(set_intersection(VertexSet{1, 2, 5}, VertexSet{2, 5, 7}).ids() == std::vector<int>{2, 5});
}

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), std::invalid_argument);
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);  // duplicates collapse
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("closed neighborhood") {
    Graph c4 = Graph::cycle(4);
    CHECK(closed_neighborhood(c4, VertexSet{0}).ids() == std::vector<int>{0, 1, 3});
    CHECK(closed_neighborhood(c4, VertexSet{}).empty());
    Graph k4 = Graph::complete(4);
    CHECK(closed_neighborhood(k4, VertexSet{2}).size() == 4);
    CHECK_THROWS_AS(closed_neighborhood(c4, VertexSet{9}), std::invalid_argument);
}

TEST_CASE("delete vertices") {
    Graph c4 = Graph::cycle(4);
    Subgraph p = delete_vertices(c4, VertexSet{0});
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(is_isomorphic_small(p.graph, Graph::path(3)));

    Subgraph same = delete_vertices(c4, VertexSet{});
    CHECK(same.graph == c4);
    CHECK(same.origin == std::vector<int>{0, 1, 2, 3});

    // deleting a degree-3 vertex of the diamond leaves a 3-path
    Subgraph d = delete_vertices(diamond_graph(), VertexSet{0});
    CHECK(is_isomorphic_small(d.graph, Graph::path(3)));
}

TEST_CASE("deleting N[D] leaves exactly the complement") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        VertexSet d;
        for (int v = 0; v < n; ++v)
            if (rng() % 4 == 0) d.insert(v);
        VertexSet nd = closed_neighborhood(g, d);
        Subgraph rest = delete_vertices(g, nd);
        VertexSet full;
        for (int v = 0; v < n; ++v) full.insert(v);
        CHECK(VertexSet::of(rest.origin) == set_difference(full, nd));
    }
}

TEST_CASE("components") {
    Graph both = oracles::disjoint_union(Graph::cycle(4), Graph::cycle(5));
    auto comps = components(both);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.vertex_count() == 4);
    CHECK(comps[1].graph.vertex_count() == 5);
    CHECK(comps[1].to_parent(0) == 4);

    CHECK(components(Graph::cycle(5)).size() == 1);
    CHECK(components(Graph(3)).size() == 3);
}

TEST_CASE("components partition the graph") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        auto comps = components(g);
        int total = 0, edge_total = 0;
        for (auto& c : comps) {
            total += c.graph.vertex_count();
            edge_total += c.graph.edge_count();
        }
        CHECK(total == n);
        CHECK(edge_total == g.edge_count());  // no edges lost between components
    }
}

TEST_CASE("blocks") {
    // 4-cycle with a pendant edge at vertex 0
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    auto dec = blocks(g);
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices == VertexSet{0});
    bool saw_cycle = false, saw_bridge = false;
    for (auto& b : dec.blocks) {
        if (b.vertices.size() == 4) {
            CHECK(!b.is_bridge);
            CHECK(b.vertices == VertexSet{0, 1, 2, 3});
            saw_cycle = true;
        }
        if (b.vertices.size() == 2) {
            CHECK(b.is_bridge);
            CHECK(b.vertices == VertexSet{0, 4});
            saw_bridge = true;
        }
    }
    CHECK(saw_cycle);
    CHECK(saw_bridge);

    auto tree = blocks(Graph::path(5));
    CHECK(tree.blocks.size() == 4);
    for (auto& b : tree.blocks) CHECK(b.is_bridge);

    auto c5 = blocks(Graph::cycle(5));
    REQUIRE(c5.blocks.size() == 1);
    CHECK(c5.blocks[0].vertices.size() == 5);
    CHECK(c5.cut_vertices.empty());
}

TEST_CASE("blocks partition edges and contain every cycle") {
    for (const Graph& g : oracles::all_labeled_graphs(6)) {
        auto dec = blocks(g);
        int edge_total = 0;
        for (auto& b : dec.blocks) edge_total += induced_subgraph(g, b.vertices).graph.edge_count();
        CHECK(edge_total == g.edge_count());
        for (const auto& cyc : oracles::all_cycles(g)) {
            VertexSet cv = VertexSet::of(cyc);
            bool inside_one = false;
            for (auto& b : dec.blocks)
                if (set_intersection(cv, b.vertices).size() == cv.size()) inside_one = true;
            CHECK(inside_one);
        }
    }
}

TEST_CASE("max degree vertex") {
    CHECK(max_degree_vertex(Graph::star(3)) == 0);
    CHECK(max_degree_vertex(Graph::cycle(5)) == 0);  // tie -> smallest id
    CHECK(max_degree_vertex(diamond_graph()) == 0);  // degree-3 vertices are 0 and 2
    CHECK_THROWS_AS(max_degree_vertex(Graph(0)), std::invalid_argument);
}

TEST_CASE("isomorphism examples") {
    Graph c4 = Graph::cycle(4);
    Graph relabeled = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(is_isomorphic_small(c4, relabeled));
    CHECK(!is_isomorphic_small(c4, Graph::path(4)));
    Graph k4_minus = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(is_isomorphic_small(diamond_graph(), k4_minus));
    CHECK_THROWS_AS(is_isomorphic_small(Graph(11), Graph(11)), std::invalid_argument);
}

TEST_CASE("isomorphism is invariant under relabeling") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2 == 0) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        CHECK(is_isomorphic_small(g, g));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edges(n, mapped);
        CHECK(is_isomorphic_small(g, h));
        CHECK(is_isomorphic_small(h, g));
    }
}

TEST_CASE("origin maps compose") {
    Graph g = Graph::path(6);
    Subgraph a = delete_vertices(g, VertexSet{0});      // vertices 1..5
    Subgraph b = delete_vertices(a.graph, VertexSet{0});  // drops original 1
    auto composed = compose_origin(a.origin, b.origin);
    CHECK(composed == std::vector<int>{2, 3, 4, 5});
}
