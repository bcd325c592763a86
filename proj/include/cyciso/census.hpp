#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cyciso/detect.hpp"
#include "cyciso/graph.hpp"

namespace cyciso {

struct CensusOptions {
    std::vector<CycleFamily> families = {CycleFamily::all(), CycleFamily::non_triangle(),
                                         CycleFamily::fixed(4)};
    bool check_thm1 = true;   // all-cycles bound 4*iota <= n (skip the triangle)
    bool check_thm2 = true;   // all-cycles bound 5*iota <= m+1 plus its equality class
    bool check_thm3 = true;   // non-triangle bound 6*iota <= m+1 plus its equality class
    bool check_c4cor = true;  // 4-cycle-family bound 6*iota <= m+1
    bool with_timings = true;
};

struct CensusSummary {
    long long graphs = 0;
    long long violations = 0;
    std::map<std::string, long long> failed_checks;  // check name -> count

    int exit_code() const { return violations == 0 ? 0 : 1; }
};

/// Equality classification by the structure recognizers:
/// "c4", "c5", "diamond", "pure-special-c4", "pure-special-c3", or "none".
/// The classes are mutually exclusive.
std::string equality_class(const Graph& g);

/// Verify the bounds on each input graph (split into components first) and
/// stream one JSON record per processed graph, then a JSON summary line.
/// A check fails only when a theorem's bound or its equality
/// characterization is violated, which would indicate a bug.
CensusSummary run_census(const std::vector<Graph>& graphs, const CensusOptions& opts, std::ostream& out);

}  // namespace cyciso
