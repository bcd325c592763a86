#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyciso/detect.hpp"
#include "cyciso/graph.hpp"
#include "cyciso/special.hpp"

namespace cyciso {

/// Raised when the case analysis reaches a state its derivation rules out, or
/// when a produced set fails verification. Always indicates an implementation
/// bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Repeatedly delete isolated vertices and leaves until minimum degree >= 2
/// or the graph is empty. Isolation numbers are preserved for any cycle
/// family, and isolating sets of the core lift back unchanged.
std::pair<Subgraph, VertexSet> reduce_leaves(const Graph& g);

/// Checked deletion of a fragment Y whose only outside contact is x and that
/// together with x spans no family graph: isolating sets of g - Y are
/// isolating sets of g. Throws naming the violated precondition.
Subgraph prune_dominated_fragment(const Graph& g, int x, const VertexSet& y, const CycleFamily& fam);

/// True iff g[Y] contains no family graph and every component of g - Y sends
/// at most one edge to Y (then isolating sets of g - Y lift to g).
bool lemma4_applicable(const Graph& g, const VertexSet& y, const CycleFamily& fam);

enum class ComponentClass {
    pure_special,   // pure special graph over the 4-cycle
    diamond_or_c5,  // single diamond or 5-cycle
    four_cycle,     // plain 4-cycle
    other,
};

struct ClassifiedComponent {
    Subgraph sub;  // component of g - N[v], ids mapped back to g
    ComponentClass cls = ComponentClass::other;
    int edges = 0;
    std::optional<SpecialDecomposition> decomposition;  // local ids, pure_special only
    int anchor_x = -1;            // smallest link edge (x in N(v), y in the component)
    int anchor_y = -1;
    std::vector<int> linked_to;   // distinct linked N(v) vertices, ascending

    VertexSet vertices() const;   // component vertex set in g ids
};

/// Edge bookkeeping around the max-degree vertex: three chosen edges at v,
/// one anchor per component, and the slack counts a and b that steer the
/// case dispatch.
struct CaseAccounting {
    std::vector<std::pair<int, int>> a1;        // (v,x) for the three smallest neighbours
    std::vector<std::pair<int, int>> a2;        // anchor edges (x,y)
    int m1 = 0;                                 // |E(g[N[v]])|
    int m2 = 0;                                 // |E(N(v), V(g'))|
    int m3 = 0;                                 // component edges
    int a = 0;                                  // |M1\A1| + |M2\A2|
    int b = 0;                                  // number of `other`-class anchors
    std::vector<std::pair<int, int>> m2_extra;  // M2 \ A2, ascending
};

struct ComponentClassification {
    int v = -1;
    VertexSet closed_nv;
    std::vector<ClassifiedComponent> comps;
    CaseAccounting acc;
};

/// Components of g - N[v] with class, anchor, and accounting. Requires g
/// connected and N[v] != V(g). The edge identity
///   m = 3 + a + b + sum_{other} m_i + sum_{rest} (m_i + 1)
/// is asserted before returning.
ComponentClassification classify_components(const Graph& g, int v);

struct TraceNode {
    std::string label;
    int n = 0, m = 0;
    int size = -1;          // |D| produced at this node
    std::vector<int> key;   // context vertices (v; x,y; ...)
    std::vector<TraceNode> children;
};

struct ConstructionTrace {
    TraceNode root;
    std::vector<std::string> labels() const;  // preorder case labels
};

struct ConstructionResult {
    VertexSet set;
    ConstructionTrace trace;
};

/// The algorithm behind the (m+1)/6 bound: for connected g that is not a
/// 4-cycle, returns a set D with
///   (P1) D isolates every non-triangle cycle,
///   (P2) 6|D| <= m+1,
///   (P3) 6|D| <= m unless g is a pure special graph, a diamond, or a 5-cycle.
/// Every returned set, including recursive ones, is verified against all
/// three properties; failures raise internal_error.
ConstructionResult construct_isolating_set(const Graph& g);

}  // namespace cyciso
