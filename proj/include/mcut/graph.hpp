#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcut {

// Sentinel for unreachable vertices / undefined radius and diameter.
constexpr int kInfinite = -1;

// Simple undirected graph over dense 0-based vertex ids. Edges are stored
// normalised (u < v) and sorted; adjacency lists are sorted ascending.
// Self-loops and duplicate edges are rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> mat_;  // n*n adjacency matrix for O(1) has_edge
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Distances from source; kInfinite for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

struct Bipartition {
    std::vector<int> side_a;  // contains vertex 0 when n > 0
    std::vector<int> side_b;
};

// Either a two-colouring or an odd cycle (closed vertex sequence) witnessing
// that none exists.
struct BipartitionResult {
    std::optional<Bipartition> bipartition;
    std::vector<int> odd_cycle;
};

BipartitionResult find_bipartition(const Graph& g);

struct StructuralReport {
    bool connected = false;
    std::optional<Bipartition> bipartition;
    int radius = kInfinite;    // kInfinite when disconnected
    int diameter = kInfinite;  // kInfinite when disconnected
    int center = kInfinite;    // smallest vertex of minimum eccentricity
};

StructuralReport structural_report(const Graph& g);

// Sorted ascending.
std::vector<int> common_neighbours(const Graph& g, int u, int v);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Text format: optional 'c' comment lines, one 'p <n> <m>' header, then m
// lines 'e <u> <v>' with 1-based endpoints. write_graph emits the exact
// canonical form (edges sorted ascending) and read_graph(write_graph(g)) == g.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
std::string write_graph_string(const Graph& g);

}  // namespace mcut
