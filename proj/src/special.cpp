#include "cyciso/special.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cyciso/gen.hpp"

namespace cyciso {

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return g.connected();
}

void require(bool ok, const char* clause) {
    if (!ok) throw std::invalid_argument(std::string("SpecialSpec: ") + clause);
}

}  // namespace

void SpecialSpec::validate() const {
    require(is_cycle_graph(base) && (base.vertex_count() == 3 || base.vertex_count() == 4),
            "base must be a cycle on 3 or 4 vertices");
    int k = base.edge_count();
    require(q >= 1, "q must be at least 1");
    require(r >= 0 && r <= k + 1, "remainder size r must satisfy 0 <= r <= k+1");
    require(m + 1 == q * (k + 2) + r, "m+1 = q(k+2) + r must hold");
    require(static_cast<int>(tree_edges.size()) == q - 1, "quotient tree needs exactly q-1 edges");
    {
        Graph t = Graph::from_edges(q, tree_edges);  // validates ids, rejects loops
        require(t.edge_count() == q - 1, "quotient tree edges must be distinct");
        require(t.connected(), "quotient tree must be connected");
    }
    require(remainder.vertex_count() >= 1, "remainder must contain the gluing vertex");
    require(remainder.edge_count() == r, "remainder must have exactly r edges");
    require(remainder.connected(), "remainder must be connected");
    if (r == 0) require(remainder.vertex_count() == 1, "pure remainder is the single gluing vertex");
    require(static_cast<int>(attach.size()) == q, "one attachment vertex per constituent");
    for (int w : attach) require(w >= 0 && w < base.vertex_count(), "attachment vertex outside base");
}

Graph build_special(const SpecialSpec& spec) {
    spec.validate();
    int base_n = spec.base.vertex_count();
    int rem_extra = spec.remainder.vertex_count() - 1;
    int n = spec.q + spec.q * base_n + rem_extra;
    auto copy_vertex = [&](int i, int w) { return spec.q + i * base_n + w; };
    int rem_off = spec.q + spec.q * base_n;
    auto rem_vertex = [&](int t) { return t == 0 ? spec.q - 1 : rem_off + t - 1; };

    std::vector<std::pair<int, int>> edges = spec.tree_edges;
    for (int i = 0; i < spec.q; ++i) {
        edges.emplace_back(i, copy_vertex(i, spec.attach[i]));
        for (auto [a, b] : spec.base.edge_list()) edges.emplace_back(copy_vertex(i, a), copy_vertex(i, b));
    }
    for (auto [a, b] : spec.remainder.edge_list()) edges.emplace_back(rem_vertex(a), rem_vertex(b));

    Graph g = Graph::from_edges(n, edges);
    if (g.edge_count() != spec.m || !g.connected())
        throw std::logic_error("build_special: assembled graph violates the construction");
    return g;
}

std::pair<SpecialSpec, Graph> random_special(const Graph& base, int m, bool pure, std::uint64_t seed) {
    if (!is_cycle_graph(base) || (base.vertex_count() != 3 && base.vertex_count() != 4))
        throw std::invalid_argument("random_special: base must be a cycle on 3 or 4 vertices");
    int k = base.edge_count();
    int q = (m + 1) / (k + 2);
    int r = (m + 1) - q * (k + 2);
    if (q < 1) throw std::invalid_argument("random_special: m admits no q >= 1");
    if (pure && r != 0)
        throw std::invalid_argument("random_special: m+1 is not a multiple of " + std::to_string(k + 2) +
                                    ", no pure graph exists");

    std::mt19937_64 rng(seed);
    SpecialSpec spec;
    spec.base = base;
    spec.m = m;
    spec.q = q;
    spec.r = r;
    spec.tree_edges = random_tree_edges(q, rng);
    std::uniform_int_distribution<int> pick_attach(0, base.vertex_count() - 1);
    for (int i = 0; i < q; ++i) spec.attach.push_back(pick_attach(rng));

    if (r == 0) {
        spec.remainder = Graph(1);
    } else {
        int n_min = 2;
        while (n_min * (n_min - 1) / 2 < r) ++n_min;
        std::uniform_int_distribution<int> pick_n(n_min, r + 1);
        for (;;) {  // rejection sampling over r-edge graphs until connected
            int nr = pick_n(rng);
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < nr; ++a)
                for (int b = a + 1; b < nr; ++b) pairs.emplace_back(a, b);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            pairs.resize(static_cast<std::size_t>(r));
            Graph cand = Graph::from_edges(nr, pairs);
            if (cand.connected()) {
                spec.remainder = cand;
                break;
            }
        }
    }
    Graph g = build_special(spec);
    return {spec, g};
}

std::optional<SpecialDecomposition> recognize_pure_special(const Graph& g, const Graph& base) {
    if (!is_cycle_graph(base) || (base.vertex_count() != 3 && base.vertex_count() != 4))
        throw std::invalid_argument("recognize_pure_special: base must be a cycle on 3 or 4 vertices");
    int len = base.vertex_count();
    if (g.vertex_count() == 0 || !g.connected()) return std::nullopt;

    BlockDecomposition dec = blocks(g);
    SpecialDecomposition out;
    for (const auto& block : dec.blocks) {
        if (block.is_bridge) continue;
        if (block.vertices.size() != len) return std::nullopt;
        // a block with all internal degrees 2 is a cycle copy of the base
        Subgraph b = induced_subgraph(g, block.vertices);
        for (int v = 0; v < b.graph.vertex_count(); ++v)
            if (b.graph.degree(v) != 2) return std::nullopt;

        VertexSet cuts_in_block = set_intersection(block.vertices, dec.cut_vertices);
        if (cuts_in_block.size() != 1) return std::nullopt;
        int w = cuts_in_block.ids().front();
        std::vector<int> outside;
        for (int t : g.neighbors(w))
            if (!block.vertices.contains(t)) outside.push_back(t);
        if (outside.size() != 1) return std::nullopt;
        out.constituents.push_back({outside.front(), block.vertices, w});
    }
    out.q = static_cast<int>(out.constituents.size());
    if (out.q == 0) return std::nullopt;

    std::vector<int> connection_ids;
    VertexSet constituent_vertices;
    for (const auto& c : out.constituents) {
        connection_ids.push_back(c.connection);
        constituent_vertices = set_union(constituent_vertices, c.cycle);
    }
    VertexSet connections = VertexSet::of(connection_ids);
    if (connections.size() != out.q) return std::nullopt;                       // connections distinct
    if (!set_intersection(connections, constituent_vertices).empty()) return std::nullopt;
    if (connections.size() + constituent_vertices.size() != g.vertex_count()) return std::nullopt;

    // the connections must induce a tree (the quotient graph)
    for (int u : connections)
        for (int t : g.neighbors(u))
            if (connections.contains(t) && u < t) out.tree_edges.emplace_back(u, t);
    if (static_cast<int>(out.tree_edges.size()) != out.q - 1) return std::nullopt;
    {
        std::vector<std::pair<int, int>> local;
        for (auto [u, t] : out.tree_edges) {
            int lu = static_cast<int>(std::lower_bound(connections.begin(), connections.end(), u) -
                                      connections.begin());
            int lt = static_cast<int>(std::lower_bound(connections.begin(), connections.end(), t) -
                                      connections.begin());
            local.emplace_back(lu, lt);
        }
        if (!Graph::from_edges(out.q, local).connected()) return std::nullopt;
    }
    if (g.edge_count() != out.q * len + out.q + (out.q - 1)) return std::nullopt;
    return out;
}

Graph diamond_graph() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

bool is_diamond_or_c5(const Graph& g) {
    if (g.vertex_count() == 4) return is_isomorphic_small(g, diamond_graph());
    if (g.vertex_count() == 5) return is_isomorphic_small(g, Graph::cycle(5));
    return false;
}

VertexSet prop1_isolating_set(const SpecialDecomposition& dec, const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("prop1_isolating_set: vertex out of range");
    int home = -1;
    for (int i = 0; i < dec.q; ++i)
        if (dec.constituents[i].connection == v || dec.constituents[i].cycle.contains(v)) {
            home = i;
            break;
        }
    if (home == -1)
        throw std::invalid_argument("prop1_isolating_set: vertex not covered by the decomposition");
    VertexSet d{v};
    for (int i = 0; i < dec.q; ++i)
        if (i != home) d.insert(dec.constituents[i].connection);
    return d;
}

}  // namespace cyciso
