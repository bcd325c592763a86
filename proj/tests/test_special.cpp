#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cyciso/exact.hpp"
#include "cyciso/special.hpp"
#include "oracles.hpp"

using namespace cyciso;

namespace {

SpecialSpec pure_c4_spec(int q) {
    SpecialSpec spec;
    spec.base = Graph::cycle(4);
    spec.m = 6 * q - 1;
    spec.q = q;
    spec.r = 0;
    for (int i = 0; i + 1 < q; ++i) spec.tree_edges.emplace_back(i, i + 1);
    spec.remainder = Graph(1);
    spec.attach.assign(static_cast<std::size_t>(q), 0);
    return spec;
}

}  // namespace

TEST_CASE("build examples") {
    Graph g1 = build_special(pure_c4_spec(1));
    CHECK(g1.vertex_count() == 5);
    CHECK(g1.edge_count() == 5);
    CHECK(is_isomorphic_small(g1, Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})));

    Graph g2 = build_special(pure_c4_spec(2));
    CHECK(g2.vertex_count() == 10);
    CHECK(g2.edge_count() == 11);
    CHECK(g2.connected());

    SpecialSpec c3;
    c3.base = Graph::cycle(3);
    c3.m = 4;
    c3.q = 1;
    c3.r = 0;
    c3.remainder = Graph(1);
    c3.attach = {2};
    Graph g3 = build_special(c3);
    CHECK(is_isomorphic_small(g3, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));
}

TEST_CASE("spec validation names the violated clause") {
    SpecialSpec s = pure_c4_spec(2);
    s.m = 12;  // breaks m+1 = q(k+2) + r
    CHECK_THROWS_WITH_AS(build_special(s), doctest::Contains("m+1"), std::invalid_argument);

    s = pure_c4_spec(2);
    s.tree_edges.clear();
    CHECK_THROWS_WITH_AS(build_special(s), doctest::Contains("tree"), std::invalid_argument);

    s = pure_c4_spec(2);
    s.attach = {0};
    CHECK_THROWS_WITH_AS(build_special(s), doctest::Contains("attachment"), std::invalid_argument);

    s = pure_c4_spec(1);
    s.base = Graph::path(4);
    CHECK_THROWS_WITH_AS(build_special(s), doctest::Contains("cycle"), std::invalid_argument);

    s = pure_c4_spec(1);
    s.r = 1;
    s.m = 6;
    CHECK_THROWS_WITH_AS(build_special(s), doctest::Contains("remainder"), std::invalid_argument);
}

TEST_CASE("random specials") {
    auto [spec, g] = random_special(Graph::cycle(4), 17, true, 123);
    CHECK(spec.q == 3);
    CHECK(spec.r == 0);
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 17);
    auto dec = recognize_pure_special(g, Graph::cycle(4));
    REQUIRE(dec.has_value());
    CHECK(dec->q == 3);

    // q = 1 pure has a single shape
    auto [sa, ga] = random_special(Graph::cycle(4), 5, true, 1);
    auto [sb, gb] = random_special(Graph::cycle(4), 5, true, 999);
    CHECK(is_isomorphic_small(ga, gb));

    // non-pure graphs are never accepted by the pure recognizer
    auto [sc, gc] = random_special(Graph::cycle(4), 12, false, 7);
    CHECK(sc.r == 1);
    CHECK(!recognize_pure_special(gc, Graph::cycle(4)).has_value());

    CHECK_THROWS_AS(random_special(Graph::cycle(4), 3, false, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_special(Graph::cycle(4), 12, true, 0), std::invalid_argument);
}

TEST_CASE("generator determinism") {
    auto [s1, g1] = random_special(Graph::cycle(4), 23, false, 77);
    auto [s2, g2] = random_special(Graph::cycle(4), 23, false, 77);
    CHECK(g1 == g2);
    auto [s3, g3] = random_special(Graph::cycle(4), 23, false, 78);
    CHECK(g3.edge_count() == 23);
}

TEST_CASE("recognizer examples") {
    Graph pendant = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    auto dec = recognize_pure_special(pendant, Graph::cycle(4));
    REQUIRE(dec.has_value());
    CHECK(dec->q == 1);
    CHECK(dec->constituents[0].connection == 4);
    CHECK(dec->constituents[0].attachment == 0);
    CHECK(dec->constituents[0].cycle == VertexSet{0, 1, 2, 3});
    CHECK(dec->remainder.empty());

    CHECK(!recognize_pure_special(diamond_graph(), Graph::cycle(4)).has_value());
    CHECK(!recognize_pure_special(Graph::cycle(4), Graph::cycle(4)).has_value());
    CHECK(!recognize_pure_special(Graph::cycle(5), Graph::cycle(4)).has_value());

    Graph tri_pendant = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK(recognize_pure_special(tri_pendant, Graph::cycle(3)).has_value());
    CHECK(!recognize_pure_special(tri_pendant, Graph::cycle(4)).has_value());

    // 4-cycle with a 2-edge tail: right block shapes, wrong vertex span
    Graph tail = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
    CHECK(!recognize_pure_special(tail, Graph::cycle(4)).has_value());

    CHECK_THROWS_AS(recognize_pure_special(pendant, Graph::cycle(5)), std::invalid_argument);
}

TEST_CASE("generator and recognizer round-trip") {
    std::mt19937_64 seeds(2024);
    for (const Graph& base : {Graph::cycle(3), Graph::cycle(4)}) {
        int k = base.edge_count();
        for (int trial = 0; trial < 100; ++trial) {
            int q = 1 + static_cast<int>(seeds() % 5);
            int m = q * (k + 2) - 1;
            auto [spec, g] = random_special(base, m, true, seeds());
            CHECK(g.edge_count() == m);
            CHECK(g.connected());
            auto dec = recognize_pure_special(g, base);
            REQUIRE(dec.has_value());
            CHECK(dec->q == q);
        }
    }
}

TEST_CASE("pure builds are pure, non-pure builds are not") {
    std::mt19937_64 seeds(9);
    for (int trial = 0; trial < 40; ++trial) {
        int q = 1 + static_cast<int>(seeds() % 3);
        int r = static_cast<int>(seeds() % 6);
        int m = q * 6 + r - 1;
        if (m < 5) continue;
        auto [spec, g] = random_special(Graph::cycle(4), m, false, seeds());
        CHECK(g.edge_count() == m);
        CHECK(g.connected());
        CHECK(spec.pure() == (r == 0));
        CHECK(spec.pure() == (spec.remainder.edge_count() == 0));
        CHECK(recognize_pure_special(g, Graph::cycle(4)).has_value() == spec.pure());
    }
}

TEST_CASE("recognizer soundness on the small-graph census") {
    // the only accepted graphs with at most 7 vertices are the single-pendant
    // cycles (q = 1); anything else is too small for q >= 2
    Graph c4_pendant = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    Graph c3_pendant = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    for (const Graph& g : oracles::connected_up_to(7)) {
        bool c4_accept = recognize_pure_special(g, Graph::cycle(4)).has_value();
        CHECK(c4_accept == is_isomorphic_small(g, c4_pendant));
        bool c3_accept = recognize_pure_special(g, Graph::cycle(3)).has_value();
        CHECK(c3_accept == is_isomorphic_small(g, c3_pendant));
    }
}

TEST_CASE("diamond or c5") {
    CHECK(is_diamond_or_c5(Graph::cycle(5)));
    CHECK(is_diamond_or_c5(diamond_graph()));
    CHECK(!is_diamond_or_c5(Graph::complete(4)));
    CHECK(!is_diamond_or_c5(Graph::cycle(4)));
    CHECK(!is_diamond_or_c5(Graph::path(5)));
}

TEST_CASE("prop 1 isolating sets") {
    Graph g1 = build_special(pure_c4_spec(1));  // connection 0? layout: connection 0, cycle 1..4
    auto dec1 = recognize_pure_special(g1, Graph::cycle(4));
    REQUIRE(dec1.has_value());
    int w = dec1->constituents[0].attachment;
    VertexSet d1 = prop1_isolating_set(*dec1, g1, w);
    CHECK(d1 == VertexSet{w});
    CHECK(is_isolating(g1, CycleFamily::non_triangle(), d1));

    Graph g2 = build_special(pure_c4_spec(2));
    auto dec2 = recognize_pure_special(g2, Graph::cycle(4));
    REQUIRE(dec2.has_value());
    int v1 = dec2->constituents[0].connection;
    int v2 = dec2->constituents[1].connection;
    VertexSet d2 = prop1_isolating_set(*dec2, g2, v1);
    CHECK(d2 == VertexSet{v1, v2});
    CHECK(is_isolating(g2, CycleFamily::non_triangle(), d2));

    // a degree-2 cycle vertex of the second constituent
    int cyc2 = -1;
    for (int t : dec2->constituents[1].cycle)
        if (g2.degree(t) == 2) {
            cyc2 = t;
            break;
        }
    REQUIRE(cyc2 != -1);
    VertexSet d3 = prop1_isolating_set(*dec2, g2, cyc2);
    CHECK(d3 == VertexSet{cyc2, v1});
    CHECK(is_isolating(g2, CycleFamily::non_triangle(), d3));
    CHECK(d3.size() == 2);

    CHECK_THROWS_AS(prop1_isolating_set(*dec2, g2, 99), std::invalid_argument);
}

TEST_CASE("prop 1 numerics for generated graphs") {
    std::mt19937_64 seeds(31);
    for (int trial = 0; trial < 20; ++trial) {
        int q = 1 + static_cast<int>(seeds() % 2);
        auto [spec, g] = random_special(Graph::cycle(4), 6 * q - 1, true, seeds());
        CHECK(g.edge_count() == 6 * q - 1);
        auto r = isolation_number(g, CycleFamily::non_triangle());
        REQUIRE(r.has_value());
        CHECK(r->size == q);
    }
}

TEST_CASE("floor identity for generated special graphs") {
    std::mt19937_64 seeds(32);
    for (int trial = 0; trial < 20; ++trial) {
        int q = 1 + static_cast<int>(seeds() % 2);
        int r = static_cast<int>(seeds() % 6);
        int m = 6 * q + r - 1;
        auto [spec, g] = random_special(Graph::cycle(4), m, false, seeds());
        auto res = isolation_number(g, CycleFamily::non_triangle());
        REQUIRE(res.has_value());
        CHECK(res->size == (m + 1) / 6);
    }
}
