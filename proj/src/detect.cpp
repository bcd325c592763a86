#include "cyciso/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyciso {

CycleFamily CycleFamily::fixed(int len) {
    if (len < 3) throw std::invalid_argument("CycleFamily::fixed: cycle length must be >= 3");
    return {Kind::fixed_length, len};
}

bool CycleFamily::admits(int cycle_len) const {
    switch (kind) {
        case Kind::all_cycles: return cycle_len >= 3;
        case Kind::non_triangle: return cycle_len >= 4;
        case Kind::fixed_length: return cycle_len == length;
    }
    return false;
}

std::string CycleFamily::name() const {
    switch (kind) {
        case Kind::all_cycles: return "c";
        case Kind::non_triangle: return "cprime";
        case Kind::fixed_length: return "c" + std::to_string(length);
    }
    return "?";
}

bool valid_witness(const Graph& g, const CycleFamily& fam, const CycleWitness& w) {
    int r = static_cast<int>(w.size());
    if (r < 3 || !fam.admits(r)) return false;
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : w)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i < r; ++i)
        if (!g.has_edge(w[i], w[(i + 1) % r])) return false;
    return true;
}

namespace {

// ---- all cycles: DFS back edge ----

std::optional<CycleWitness> dfs_any_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto nb = g.neighbors(v);
            if (next < nb.size()) {
                int w = nb[next++];
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back({w, 0});
                } else if (w != parent[v]) {
                    // w is an ancestor of v on the DFS stack or a cross to a
                    // finished vertex; walk the parent chain to check
                    std::vector<int> cyc{v};
                    int cur = v;
                    while (cur != w && cur != -1) {
                        cur = parent[cur];
                        if (cur != -1 && cur != w) cyc.push_back(cur);
                    }
                    if (cur == w) {
                        cyc.push_back(w);
                        std::reverse(cyc.begin(), cyc.end());
                        return cyc;
                    }
                }
            } else {
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

// ---- fixed length: bounded DFS, smallest cycle vertex first ----

bool fixed_dfs(const Graph& g, int start, int len, std::vector<int>& path, std::vector<char>& on_path,
               CycleWitness& out) {
    int v = path.back();
    if (static_cast<int>(path.size()) == len) {
        if (g.has_edge(v, start)) {
            out = path;
            return true;
        }
        return false;
    }
    for (int w : g.neighbors(v)) {
        if (w <= start || on_path[w]) continue;
        path.push_back(w);
        on_path[w] = 1;
        if (fixed_dfs(g, start, len, path, on_path, out)) return true;
        on_path[w] = 0;
        path.pop_back();
    }
    return false;
}

std::optional<CycleWitness> find_fixed_cycle(const Graph& g, int len) {
    int n = g.vertex_count();
    if (len == 4) {
        // exact 4-cycle test: two vertices with two common neighbours
        for (int u = 0; u < n; ++u) {
            for (int w = u + 1; w < n; ++w) {
                auto a = g.neighbors(u);
                auto b = g.neighbors(w);
                std::vector<int> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                if (common.size() >= 2) return CycleWitness{u, common[0], w, common[1]};
            }
        }
        return std::nullopt;
    }
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        on_path[s] = 1;
        CycleWitness out;
        if (fixed_dfs(g, s, len, path, on_path, out)) return out;
        on_path[s] = 0;
    }
    return std::nullopt;
}

// ---- long cycle inside a block: two internally disjoint paths via flow ----

struct UnitFlow {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit UnitFlow(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add(int a, int b, int cap) {
        arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});  // node, arc index
        std::vector<int> queue{s};
        pred[s] = {s, -1};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap <= 0 || pred[a.to].first != -1) continue;
                pred[a.to] = {v, i};
                if (a.to == t) {
                    int cur = t;
                    while (cur != s) {
                        auto [pv, pi] = pred[cur];
                        arcs[pv][pi].cap -= 1;
                        arcs[arcs[pv][pi].to][arcs[pv][pi].rev].cap += 1;
                        cur = pv;
                    }
                    return true;
                }
                queue.push_back(a.to);
            }
        }
        return false;
    }
};

// Two internally vertex-disjoint u-w paths in graph h (local ids); h must be
// 2-connected. Returns vertex sequences including endpoints.
std::pair<std::vector<int>, std::vector<int>> two_disjoint_paths(const Graph& h, int u, int w) {
    int k = h.vertex_count();
    auto in_node = [](int v) { return 2 * v; };
    auto out_node = [](int v) { return 2 * v + 1; };
    UnitFlow flow(2 * k);
    for (int v = 0; v < k; ++v) flow.add(in_node(v), out_node(v), (v == u || v == w) ? 2 : 1);
    for (auto [a, b] : h.edge_list()) {
        flow.add(out_node(a), in_node(b), 1);
        flow.add(out_node(b), in_node(a), 1);
    }
    int pushed = 0;
    while (pushed < 2 && flow.augment(in_node(u), out_node(w))) ++pushed;
    if (pushed < 2) throw std::logic_error("two_disjoint_paths: block is not 2-connected");

    // follow saturated edge arcs out of u twice
    std::vector<std::vector<char>> used(flow.arcs.size());
    for (std::size_t v = 0; v < flow.arcs.size(); ++v)
        used[v].assign(flow.arcs[v].size(), 0);
    std::pair<std::vector<int>, std::vector<int>> paths;
    for (int p = 0; p < 2; ++p) {
        std::vector<int>& path = (p == 0) ? paths.first : paths.second;
        path.push_back(u);
        int cur = u;
        while (cur != w) {
            int node = out_node(cur);
            bool advanced = false;
            for (int i = 0; i < static_cast<int>(flow.arcs[node].size()) && !advanced; ++i) {
                const auto& a = flow.arcs[node][i];
                bool edge_arc = a.to != in_node(cur) && a.to % 2 == 0;
                if (edge_arc && a.cap == 0 && !used[node][i]) {
                    used[node][i] = 1;
                    cur = a.to / 2;
                    path.push_back(cur);
                    advanced = true;
                }
            }
            if (!advanced) throw std::logic_error("two_disjoint_paths: flow decomposition failed");
        }
    }
    return paths;
}

// Extract a cycle of length >= 4 from a block with >= 4 vertices.
CycleWitness long_cycle_in_block(const Graph& g, const VertexSet& block_vertices) {
    Subgraph block = induced_subgraph(g, block_vertices);
    const Graph& h = block.graph;
    int k = h.vertex_count();

    bool all_deg2 = true;
    for (int v = 0; v < k; ++v)
        if (h.degree(v) != 2) all_deg2 = false;
    if (all_deg2) {
        // the block is itself a cycle: walk it from vertex 0
        CycleWitness cyc{0};
        int prev = -1, cur = 0;
        while (static_cast<int>(cyc.size()) < k) {
            auto nb = h.neighbors(cur);
            int nxt = (nb[0] != prev) ? nb[0] : nb[1];
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        for (int& v : cyc) v = block.to_parent(v);
        return cyc;
    }

    if (h.edge_count() == k * (k - 1) / 2) {
        // complete block: any four vertices in order form a 4-cycle
        CycleWitness cyc{block.to_parent(0), block.to_parent(1), block.to_parent(2), block.to_parent(3)};
        return cyc;
    }

    // pick the smallest nonadjacent pair and join two disjoint paths
    int u = -1, w = -1;
    for (int a = 0; a < k && u == -1; ++a)
        for (int b = a + 1; b < k && u == -1; ++b)
            if (!h.has_edge(a, b)) {
                u = a;
                w = b;
            }
    auto [p1, p2] = two_disjoint_paths(h, u, w);
    CycleWitness cyc(p1.begin(), p1.end());
    for (std::size_t i = p2.size() - 2; i >= 1; --i) cyc.push_back(p2[i]);
    for (int& v : cyc) v = block.to_parent(v);
    return cyc;
}

}  // namespace

bool contains_family_graph(const Graph& g, const CycleFamily& fam) {
    if (g.vertex_count() <= 2) return false;
    switch (fam.kind) {
        case CycleFamily::Kind::all_cycles: {
            // a component has a cycle iff it has at least as many edges as vertices
            for (const Subgraph& c : components(g))
                if (c.graph.edge_count() >= c.graph.vertex_count()) return true;
            return false;
        }
        case CycleFamily::Kind::non_triangle: {
            // a cycle of length >= 4 exists iff some block has >= 4 vertices
            for (const auto& b : blocks(g).blocks)
                if (b.vertices.size() >= 4) return true;
            return false;
        }
        case CycleFamily::Kind::fixed_length:
            return find_fixed_cycle(g, fam.length).has_value();
    }
    return false;
}

std::optional<CycleWitness> find_family_witness(const Graph& g, const CycleFamily& fam) {
    if (g.vertex_count() <= 2) return std::nullopt;
    switch (fam.kind) {
        case CycleFamily::Kind::all_cycles:
            return dfs_any_cycle(g);
        case CycleFamily::Kind::non_triangle: {
            for (const auto& b : blocks(g).blocks)
                if (b.vertices.size() >= 4) return long_cycle_in_block(g, b.vertices);
            return std::nullopt;
        }
        case CycleFamily::Kind::fixed_length:
            return find_fixed_cycle(g, fam.length);
    }
    return std::nullopt;
}

bool is_isolating(const Graph& g, const CycleFamily& fam, const VertexSet& d) {
    Subgraph residual = delete_vertices(g, closed_neighborhood(g, d));
    return !contains_family_graph(residual.graph, fam);
}

}  // namespace cyciso
