#pragma once

#include <cstdint>
#include <optional>

#include "mcut/colouring.hpp"
#include "mcut/graph.hpp"

namespace mcut {

enum class Problem {
    MatchingCut,                    // valid colouring, d = 1
    PerfectMatchingCut,             // perfect colouring
    DisconnectedPerfectMatching,    // valid colouring whose bichromatic edges
                                    // extend to a perfect matching
    DCut,                           // valid colouring, caller-chosen d
    MaxMatchingCut,                 // maximum-value valid colouring, d = 1
    MaxDisconnectedPerfectMatching  // maximum-value extendable colouring
};

// Short tag used on the command line and in reports: "mc", "pmc", "dpm",
// "dcut", "maxmc", "maxdpm".
const char* problem_name(Problem p);

struct SolveStats {
    std::int64_t branches = 0;
    std::int64_t rule_applications = 0;
};

struct SolveResult {
    bool yes = false;
    std::optional<Colouring> colouring;  // witness when yes
    std::optional<int> value;            // bichromatic edge count of the witness
    SolveStats stats;
};

// Solvers for connected bipartite graphs of diameter at most 3. Connectivity
// and bipartiteness are structural requirements and always checked (the
// algorithms use the vertex classes); enforce_class = false skips only the
// diameter/radius bound, in which case "no" answers are no longer guaranteed
// sound.
SolveResult pmc_bipartite_diam3(const Graph& g, bool enforce_class = true);
SolveResult dcut_bipartite_diam3(const Graph& g, int d, bool enforce_class = true);
SolveResult maxmc_bipartite_diam3(const Graph& g, bool enforce_class = true);
SolveResult maxdpm_bipartite_diam3(const Graph& g, bool enforce_class = true);

// Solvers for connected bipartite graphs of radius at most 2.
SolveResult dcut_bipartite_rad2(const Graph& g, int d, bool enforce_class = true);
SolveResult maxmc_bipartite_rad2(const Graph& g, bool enforce_class = true);
SolveResult maxdpm_bipartite_rad2(const Graph& g, bool enforce_class = true);

}  // namespace mcut
