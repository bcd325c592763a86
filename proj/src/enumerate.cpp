#include "cyciso/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "cyciso/io.hpp"

namespace cyciso {

namespace {

constexpr int kMaxCanon = 11;  // 55 triangle bits fit a uint64

struct Canonicalizer {
    int n = 0;
    int total_bits = 0;
    std::array<std::uint16_t, kMaxCanon> adj{};
    std::array<int, kMaxCanon> place{};
    std::array<char, kMaxCanon> used{};
    std::uint64_t best = 0;
    bool have_best = false;

    void search(int depth, std::uint64_t prefix, int bits) {
        if (depth == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (used[u]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < depth; ++i) col = (col << 1) | ((adj[u] >> place[i]) & 1u);
            std::uint64_t next = (prefix << depth) | col;
            int next_bits = bits + depth;
            if (have_best && next > (best >> (total_bits - next_bits))) continue;
            place[depth] = u;
            used[u] = 1;
            search(depth + 1, next, next_bits);
            used[u] = 0;
        }
    }
};

std::uint64_t canonical_of_masks(int n, const std::array<std::uint16_t, kMaxCanon>& adj) {
    Canonicalizer c;
    c.n = n;
    c.total_bits = n * (n - 1) / 2;
    c.adj = adj;
    c.search(0, 0, 0);
    return c.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    int total_bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((code >> (total_bits - 1 - t)) & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

bool masks_connected(int n, const std::array<std::uint16_t, kMaxCanon>& adj) {
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= adj[v];
        frontier = next & static_cast<std::uint16_t>(~seen);
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxCanon) throw std::invalid_argument("canonical_code: at most 11 vertices supported");
    std::array<std::uint16_t, kMaxCanon> adj{};
    for (auto [u, v] : g.edge_list()) {
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    return canonical_of_masks(n, adj);
}

std::string canonical_graph6(const Graph& g) {
    return encode_graph6(graph_from_code(g.vertex_count(), canonical_code(g)));
}

std::vector<Graph> enumerate_connected(int max_n) {
    if (max_n < 1) throw std::invalid_argument("enumerate_connected: need max_n >= 1");
    if (max_n > 7)
        throw std::invalid_argument(
            "enumerate_connected: built-in enumeration is capped at n = 7; pipe a graph6 file via --input "
            "for larger censuses");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        int total_bits = n * (n - 1) / 2;
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (1ull << total_bits); ++mask) {
            std::array<std::uint16_t, kMaxCanon> adj{};
            int t = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if ((mask >> t) & 1u) {
                        adj[i] |= static_cast<std::uint16_t>(1u << j);
                        adj[j] |= static_cast<std::uint16_t>(1u << i);
                    }
            if (!masks_connected(n, adj)) continue;
            seen.insert(canonical_of_masks(n, adj));
        }
        std::vector<std::uint64_t> codes(seen.begin(), seen.end());
        std::sort(codes.begin(), codes.end());
        for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
    }
    return out;
}

}  // namespace cyciso
