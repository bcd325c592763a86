#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyciso/graph.hpp"

namespace cyciso {

/// Which set of forbidden cycles defines isolation: all cycles C, the
/// non-triangle cycles C' (length >= 4), or a single fixed length.
struct CycleFamily {
    enum class Kind { all_cycles, non_triangle, fixed_length };

    Kind kind = Kind::all_cycles;
    int length = 0;  // only for fixed_length

    static CycleFamily all() { return {Kind::all_cycles, 0}; }
    static CycleFamily non_triangle() { return {Kind::non_triangle, 0}; }
    static CycleFamily fixed(int len);

    bool admits(int cycle_len) const;
    std::string name() const;  // "c", "cprime", "c4", ...

    bool operator==(const CycleFamily&) const = default;
};

/// Ordered vertex list v1..vr of a cycle in the host graph.
using CycleWitness = std::vector<int>;

/// Checks the CycleWitness invariants: r >= 3, distinct vertices, consecutive
/// pairs and the wrap-around pair are edges, and r fits the family.
bool valid_witness(const Graph& g, const CycleFamily& fam, const CycleWitness& w);

/// True iff g contains a cycle admitted by the family.
bool contains_family_graph(const Graph& g, const CycleFamily& fam);

/// Some admissible cycle when one exists.
std::optional<CycleWitness> find_family_witness(const Graph& g, const CycleFamily& fam);

/// True iff g - N[d] contains no family graph.
bool is_isolating(const Graph& g, const CycleFamily& fam, const VertexSet& d);

}  // namespace cyciso
