#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcut/colouring.hpp"
#include "mcut/graph.hpp"
#include "mcut/solvers.hpp"

namespace mcut {

// Ground truth for one graph, computed by exhaustive enumeration. max_mc,
// min_mc and max_dpm are -1 when the corresponding colouring family is empty.
// has_dcut[d - 1] answers the d-cut question for d = 1 .. d_max; by
// construction has_dcut[0] == has_mc. witnesses holds the first colouring
// found in enumeration order for each true/derived field, keyed "max_mc",
// "min_mc", "pmc", "max_dpm", "dcut_<d>".
struct OracleReport {
    bool has_mc = false;
    int max_mc = -1;
    int min_mc = -1;
    bool has_pmc = false;
    long long perfect_count = 0;  // perfect colourings up to colour swap
    bool has_dpm = false;
    int max_dpm = -1;
    std::vector<bool> has_dcut;
    std::map<std::string, Colouring> witnesses;
};

// Enumerates every colouring with vertex 0 red (all colourings up to swapping
// the colours). Throws BudgetExceededError when vertex_count > budget.
// Extendability checks build residual graphs, so on a non-bipartite input the
// dpm fields can raise UnsupportedClassError. timeout_seconds > 0 raises
// TimeoutError once the wall clock passes it (a timeout is not a "no").
OracleReport oracle_enumerate(const Graph& g, int d_max = 2, int budget = 22,
                              double timeout_seconds = 0.0);

// Same report, restricted to colourings that keep every block monochromatic.
// blocks must partition the vertex set; the first block is fixed red. Exact
// for graphs in which every valid colouring is constant on every block.
// Throws BudgetExceededError when blocks.size() > budget.
OracleReport oracle_enumerate_blocks(const Graph& g,
                                     const std::vector<std::vector<int>>& blocks,
                                     int d_max = 1, int budget = 22,
                                     double timeout_seconds = 0.0);

// Branch-and-propagate search on a connected graph: propagates the forcing
// rules after every assignment, picks the uncoloured vertex with the most
// coloured neighbours, and for the max problems prunes with a capacity bound.
// Slower per node than plain enumeration but reaches larger graphs. Throws
// TimeoutError once the wall-clock limit passes (a timeout is not a "no"), and
// ClassViolationError on a disconnected input.
SolveResult oracle_search(const Graph& g, Problem problem, int d = 1,
                          double timeout_seconds = 60.0);

}  // namespace mcut
