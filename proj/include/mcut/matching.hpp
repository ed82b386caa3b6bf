#pragma once
#include <vector>

#include "mcut/errors.hpp"
#include "mcut/graph.hpp"

namespace mcut {

struct MatchingResult {
    int size = 0;
    std::vector<int> mate;  // partner per vertex, -1 if unmatched
};

// Augmenting-path maximum matching. Requires a bipartite input; throws
// UnsupportedClassError otherwise.
MatchingResult max_bipartite_matching(const Graph& g);

// n = 0 -> true. Odd order -> false for any graph. Bipartite -> cardinality
// check via max_bipartite_matching. Non-bipartite even order is out of scope
// and raises UnsupportedClassError.
bool has_perfect_matching(const Graph& g);

}  // namespace mcut
