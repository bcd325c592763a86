#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cyciso/enumerate.hpp"
#include "cyciso/io.hpp"
#include "oracles.hpp"

using namespace cyciso;

TEST_CASE("graph6 hand-derived values") {
    // K2: n byte 'A' = 65, single 1 bit -> 100000 -> 32+63 = '_'
    CHECK(encode_graph6(Graph::complete(2)) == "A_");
    CHECK(decode_graph6("A_") == Graph::complete(2));
    // K3: bits 111 -> 111000 = 56 -> 56+63 = 'w'
    CHECK(encode_graph6(Graph::complete(3)) == "Bw");
    CHECK(decode_graph6("Bw") == Graph::complete(3));
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(decode_graph6("@") == Graph(1));
}

TEST_CASE("graph6 round trip over the census") {
    for (const Graph& g : oracles::connected_up_to(6)) {
        std::string s = encode_graph6(g);
        CHECK(decode_graph6(s) == g);
        CHECK(encode_graph6(decode_graph6(s)) == s);
    }
}

TEST_CASE("graph6 format errors carry byte offsets") {
    CHECK_THROWS_WITH_AS(decode_graph6(""), doctest::Contains("byte offset 0"), format_error);
    CHECK_THROWS_WITH_AS(decode_graph6("B"), doctest::Contains("truncated"), format_error);
    CHECK_THROWS_WITH_AS(decode_graph6("Bww"), doctest::Contains("trailing"), format_error);
    CHECK_THROWS_WITH_AS(decode_graph6("B\x1f"), doctest::Contains("out of range"), format_error);
    CHECK_THROWS_WITH_AS(decode_graph6("~??"), doctest::Contains("n > 62"), format_error);
    // P3 uses 3 of 6 bits; setting a padding bit is caught
    std::string p3 = encode_graph6(Graph::path(3));
    char dirty = static_cast<char>((((p3[1] - 63) | 1) + 63));
    CHECK_THROWS_WITH_AS(decode_graph6(std::string(1, p3[0]) + dirty), doctest::Contains("padding"),
                         format_error);
    Graph big(63);
    CHECK_THROWS_AS(encode_graph6(big), format_error);
}

TEST_CASE("edge list parsing") {
    Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    CHECK(c4 == Graph::cycle(4));

    Graph isolated = parse_edge_list("n=3\n");
    CHECK(isolated.vertex_count() == 3);
    CHECK(isolated.edge_count() == 0);

    Graph commented = parse_edge_list("# a square\n0 1\n1 2 # top\n2 3\n3 0\n\n");
    CHECK(commented == Graph::cycle(4));

    // duplicate edges collapse
    CHECK(parse_edge_list("0 1\n1 0\n").edge_count() == 1);

    CHECK_THROWS_WITH_AS(parse_edge_list("0 0\n"), doctest::Contains("line 1"), format_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\nx 2\n"), doctest::Contains("line 2"), format_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0\n"), doctest::Contains("two vertex ids"), format_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1 2\n"), doctest::Contains("trailing"), format_error);
}

TEST_CASE("enumeration counts match the known census") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    int running = 0;
    for (int n = 1; n <= 6; ++n) {
        running += expected[n];
        CHECK(static_cast<int>(oracles::connected_up_to(n).size()) == running);
    }
}

TEST_CASE("enumeration of tiny graphs is exactly the known set") {
    auto graphs = oracles::connected_up_to(3);
    REQUIRE(graphs.size() == 4);
    CHECK(is_isomorphic_small(graphs[0], Graph(1)));
    CHECK(is_isomorphic_small(graphs[1], Graph::complete(2)));
    // the two connected 3-vertex graphs, in canonical order
    bool has_p3 = false, has_k3 = false;
    for (const auto& g : graphs) {
        if (g.vertex_count() != 3) continue;
        if (is_isomorphic_small(g, Graph::path(3))) has_p3 = true;
        if (is_isomorphic_small(g, Graph::complete(3))) has_k3 = true;
    }
    CHECK(has_p3);
    CHECK(has_k3);
}

TEST_CASE("enumeration contains exactly one 2-regular graph on 4 vertices") {
    int count = 0;
    for (const Graph& g : oracles::connected_up_to(4)) {
        if (g.vertex_count() != 4) continue;
        bool reg2 = true;
        for (int v = 0; v < 4; ++v)
            if (g.degree(v) != 2) reg2 = false;
        if (reg2) ++count;
    }
    CHECK(count == 1);
}

TEST_CASE("enumeration is duplicate-free under pairwise isomorphism") {
    auto graphs = oracles::connected_up_to(5);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK(!is_isomorphic_small(graphs[i], graphs[j]));
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_WITH_AS(enumerate_connected(8), doctest::Contains("--input"), std::invalid_argument);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(17);
    for (const Graph& g : oracles::connected_up_to(5)) {
        int n = g.vertex_count();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : g.edge_list()) mapped.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edges(n, mapped);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
    }
}
