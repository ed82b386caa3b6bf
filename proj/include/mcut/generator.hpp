#pragma once

#include <cstdint>

#include "mcut/graph.hpp"

namespace mcut {

enum class GenTarget { Diam3, Rad2 };

// Random connected bipartite graph on n >= 2 vertices with diameter <= 3
// (Diam3) or radius <= 2 (Rad2), by rejection sampling: each attempt splits
// the vertices into two classes (split and edge probability drawn from the
// generator) and keeps each cross edge with probability in [0.3, 0.9].
// Identical seeds give identical graphs. Throws BudgetExceededError after
// max_attempts rejections.
Graph random_bipartite_graph(int n, GenTarget target, std::uint64_t seed,
                             int max_attempts = 100000);

}  // namespace mcut
