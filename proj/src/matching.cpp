#include "mcut/matching.hpp"

namespace mcut {

namespace {

// Kuhn's augmenting-path search from a left-side vertex.
bool augment(const Graph& g, int u, std::vector<int>& mate, std::vector<bool>& visited) {
    for (int w : g.neighbours(u)) {
        if (visited[w]) continue;
        visited[w] = true;
        if (mate[w] == -1 || augment(g, mate[w], mate, visited)) {
            mate[w] = u;
            mate[u] = w;
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingResult max_bipartite_matching(const Graph& g) {
    auto bp = find_bipartition(g);
    if (!bp.bipartition)
        throw UnsupportedClassError("max_bipartite_matching requires a bipartite graph");
    const int n = g.vertex_count();
    MatchingResult res;
    res.mate.assign(n, -1);
    for (int u : bp.bipartition->side_a) {
        if (res.mate[u] != -1) continue;
        std::vector<bool> visited(n, false);
        if (augment(g, u, res.mate, visited)) res.size++;
    }
    return res;
}

bool has_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (n % 2 == 1) return false;
    if (!find_bipartition(g).bipartition)
        throw UnsupportedClassError(
            "has_perfect_matching supports only bipartite graphs at even order");
    return max_bipartite_matching(g).size * 2 == n;
}

}  // namespace mcut
