#include "mcut/generator.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcut/errors.hpp"

namespace mcut {

namespace {

// Top 53 bits as a double in [0, 1); avoids std::uniform_real_distribution,
// whose output differs between standard-library implementations.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool meets_target(const Graph& g, GenTarget target) {
    StructuralReport rep = structural_report(g);
    if (!rep.connected) return false;
    return target == GenTarget::Diam3 ? rep.diameter <= 3 : rep.radius <= 2;
}

}  // namespace

Graph random_bipartite_graph(int n, GenTarget target, std::uint64_t seed,
                             int max_attempts) {
    if (n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (max_attempts < 1) throw std::invalid_argument("need at least one attempt");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        int n1 = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        double p = 0.3 + 0.6 * unit(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n1; ++u)
            for (int v = n1; v < n; ++v)
                if (unit(rng) < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (meets_target(g, target)) return g;
    }
    throw BudgetExceededError("no graph met the target within " +
                              std::to_string(max_attempts) + " attempts");
}

}  // namespace mcut
