#include "cyciso/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyciso/constructive.hpp"

namespace cyciso {

namespace {

constexpr int kMaxUnbudgetedVertices = 24;  // per leaf-stripped component

// Depth-limited hitting-set search. Any isolating set must contain a vertex
// of N[V(W)] for every witness cycle W of the current residual graph, so
// branching over that neighbourhood is complete.
bool search(const Graph& g, const CycleFamily& fam, VertexSet& d, int remaining, VertexSet& out) {
    Subgraph residual = delete_vertices(g, closed_neighborhood(g, d));
    auto witness = find_family_witness(residual.graph, fam);
    if (!witness) {
        out = d;
        return true;
    }
    if (remaining == 0) return false;
    VertexSet candidates = closed_neighborhood(g, residual.to_parent(VertexSet::of(*witness)));
    for (int u : candidates) {
        if (d.contains(u)) continue;
        d.insert(u);
        if (search(g, fam, d, remaining - 1, out)) return true;
        d.erase(u);
    }
    return false;
}

// Minimum isolating set of one connected leaf-free piece, capped at `cap`.
std::optional<VertexSet> solve_component(const Graph& g, const CycleFamily& fam, int cap) {
    for (int k = 0; k <= cap; ++k) {
        VertexSet d;
        VertexSet out;
        if (search(g, fam, d, k, out)) return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<IsolationResult> isolation_number(const Graph& g, const CycleFamily& fam,
                                                std::optional<int> budget) {
    IsolationResult result;
    int spent = 0;
    for (const Subgraph& comp : components(g)) {
        auto [reduced, removed] = reduce_leaves(comp.graph);
        const Graph& core = reduced.graph;
        if (core.vertex_count() == 0) continue;
        if (!budget && core.vertex_count() > kMaxUnbudgetedVertices)
            throw std::invalid_argument(
                "isolation_number: component with " + std::to_string(core.vertex_count()) +
                " vertices after leaf stripping exceeds the unbudgeted limit of " +
                std::to_string(kMaxUnbudgetedVertices) + "; pass a budget");
        int cap = budget ? *budget - spent : core.vertex_count();
        if (cap < 0) cap = 0;
        auto local = solve_component(core, fam, cap);
        if (!local) return std::nullopt;  // exceeds budget
        spent += local->size();
        if (budget && spent > *budget) return std::nullopt;
        // translate twice: reduced view -> component -> input graph
        result.witness = set_union(result.witness, comp.to_parent(reduced.to_parent(*local)));
    }
    result.size = result.witness.size();
    result.exact = true;
    return result;
}

namespace {

bool subset_search(const Graph& g, const CycleFamily& fam, std::vector<int>& pick, int next, int left,
                   VertexSet& out) {
    if (left == 0) {
        VertexSet d = VertexSet::of(pick);
        if (is_isolating(g, fam, d)) {
            out = d;
            return true;
        }
        return false;
    }
    for (int v = next; v + left <= g.vertex_count(); ++v) {
        pick.push_back(v);
        if (subset_search(g, fam, pick, v + 1, left - 1, out)) return true;
        pick.pop_back();
    }
    return false;
}

}  // namespace

IsolationResult isolation_number_naive(const Graph& g, const CycleFamily& fam) {
    constexpr int kMaxNaive = 12;
    if (g.vertex_count() > kMaxNaive)
        throw std::invalid_argument("isolation_number_naive: at most " + std::to_string(kMaxNaive) +
                                    " vertices supported");
    for (int k = 0; k <= g.vertex_count(); ++k) {
        std::vector<int> pick;
        VertexSet out;
        if (subset_search(g, fam, pick, 0, k, out)) return {k, out, true};
    }
    // unreachable: the full vertex set always isolates
    throw std::logic_error("isolation_number_naive: no isolating set found");
}

}  // namespace cyciso
