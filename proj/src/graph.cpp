#include "cyciso/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyciso {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::of(std::vector<int> ids) {
    VertexSet s;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of(std::move(out));
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + ": vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u, "Graph::from_edges");
        g.check_vertex(v, "Graph::from_edges");
        if (u == v)
            throw std::invalid_argument("Graph::from_edges: self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int m = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        m += static_cast<int>(list.size());
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("Graph::cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v, "Graph::neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, "Graph::degree");
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "Graph::has_edge");
    check_vertex(v, "Graph::has_edge");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int w : adj_[u])
            if (u < w) out.emplace_back(u, w);
    return out;
}

// ----------------------------------------------------------------- Subgraph

int Subgraph::to_parent(int local) const {
    if (local < 0 || local >= static_cast<int>(origin.size()))
        throw std::invalid_argument("Subgraph::to_parent: local id out of range");
    return origin[local];
}

VertexSet Subgraph::to_parent(const VertexSet& locals) const {
    std::vector<int> out;
    out.reserve(locals.size());
    for (int v : locals) out.push_back(to_parent(v));
    return VertexSet::of(std::move(out));
}

int Subgraph::to_local(int parent) const {
    for (int i = 0; i < static_cast<int>(origin.size()); ++i)
        if (origin[i] == parent) return i;
    return -1;
}

std::vector<int> compose_origin(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out;
    out.reserve(inner.size());
    for (int v : inner) out.push_back(outer.at(static_cast<std::size_t>(v)));
    return out;
}

// --------------------------------------------------------------- operations

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<int> out;
    for (int v : x) {
        out.push_back(v);
        auto nb = g.neighbors(v);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    return VertexSet::of(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    return closed_neighborhood(g, VertexSet{v});
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    Subgraph s;
    s.origin.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        local[v] = static_cast<int>(s.origin.size());
        s.origin.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int w : g.neighbors(v))
            if (v < w && local[w] >= 0) edges.emplace_back(local[v], local[w]);
    s.graph = Graph::from_edges(keep.size(), edges);
    return s;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& x) {
    std::vector<int> keep;
    keep.reserve(g.vertex_count());
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("delete_vertices: vertex id out of range");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!x.contains(v)) keep.push_back(v);
    return induced_subgraph(g, VertexSet::of(std::move(keep)));
}

std::vector<Subgraph> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Subgraph> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> piece{s};
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    piece.push_back(w);
                    stack.push_back(w);
                }
        }
        out.push_back(induced_subgraph(g, VertexSet::of(std::move(piece))));
    }
    return out;
}

int max_degree_vertex(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree_vertex: empty graph");
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

namespace {

// Iterative Hopcroft-Tarjan with an explicit edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.vertex_count()), -1),
          low(static_cast<std::size_t>(graph.vertex_count()), 0),
          parent(static_cast<std::size_t>(graph.vertex_count()), -1),
          is_cut(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void pop_block(int u, int w) {
        std::vector<std::pair<int, int>> edges;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            if (e == std::make_pair(u, w)) break;
        }
        block_edges.push_back(std::move(edges));
    }

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next = 0;
        };
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            auto nb = g.neighbors(v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(v, w);
                    if (v == root) ++root_children;
                    stack.push_back({w});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_cut[p] = 1;
                        pop_block(p, v);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.disc[v] == -1 && g.degree(v) > 0) finder.run(v);

    BlockDecomposition dec;
    for (auto& edges : finder.block_edges) {
        std::vector<int> verts;
        for (auto [u, w] : edges) {
            verts.push_back(u);
            verts.push_back(w);
        }
        BlockDecomposition::Block b;
        b.vertices = VertexSet::of(std::move(verts));
        b.is_bridge = edges.size() == 1;
        dec.blocks.push_back(std::move(b));
    }
    std::vector<int> cuts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) cuts.push_back(v);
    dec.cut_vertices = VertexSet::of(std::move(cuts));
    // deterministic block order: by smallest vertex, then size
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const auto& a, const auto& b) {
        if (a.vertices.ids().front() != b.vertices.ids().front())
            return a.vertices.ids().front() < b.vertices.ids().front();
        return a.vertices.ids() < b.vertices.ids();
    });
    return dec;
}

namespace {

bool iso_backtrack(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<char>& used, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || g.degree(v) != h.degree(cand)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[u], cand)) ok = false;
        if (!ok) continue;
        map[v] = cand;
        used[cand] = 1;
        if (iso_backtrack(g, h, map, used, v + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& g, const Graph& h) {
    constexpr int kMaxIso = 10;
    if (g.vertex_count() > kMaxIso || h.vertex_count() > kMaxIso)
        throw std::invalid_argument("is_isomorphic_small: graphs must have at most 10 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    return iso_backtrack(g, h, map, used, 0);
}

}  // namespace cyciso
