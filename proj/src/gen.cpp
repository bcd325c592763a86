#include "cyciso/gen.hpp"

#include <stdexcept>

namespace cyciso {

std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_tree_edges: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    if (n == 1) return edges;
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& p : pruefer) p = pick(rng);

    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int p : pruefer) ++deg[p];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int p : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, p);
        used[leaf] = 1;
        --deg[p];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a == -1 ? a : b) = v;
    edges.emplace_back(a, b);
    return edges;
}

Graph random_connected_graph(int n, double extra_p, std::mt19937_64& rng) {
    auto edges = random_tree_edges(n, rng);
    std::bernoulli_distribution coin(extra_p);
    std::vector<std::vector<char>> have(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : edges) have[u][v] = have[v][u] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have[u][v] && coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace cyciso
