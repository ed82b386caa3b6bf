#include "mcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace mcut {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(n_, {});
    mat_.assign(static_cast<size_t>(n_) * n_, false);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (mat_[static_cast<size_t>(u) * n_ + v])
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        mat_[static_cast<size_t>(u) * n_ + v] = mat_[static_cast<size_t>(v) * n_ + u] = true;
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return mat_[static_cast<size_t>(u) * n_ + v];
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(n, kInfinite);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbours(u)) {
            if (dist[w] == kInfinite) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

BipartitionResult find_bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1), parent(n, -1);
    BipartitionResult res;
    Bipartition bp;
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbours(u)) {
                if (colour[w] == -1) {
                    colour[w] = colour[u] ^ 1;
                    parent[w] = u;
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    // Odd cycle: climb both BFS paths to their meeting point.
                    std::vector<int> pu{u}, pw{w};
                    for (int x = u; x != -1; x = parent[x]) if (x != u) pu.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) if (x != w) pw.push_back(x);
                    int i = static_cast<int>(pu.size()) - 1, j = static_cast<int>(pw.size()) - 1;
                    while (i > 0 && j > 0 && pu[i - 1] == pw[j - 1]) { --i; --j; }
                    // pu[i] == pw[j] is the lowest common ancestor.
                    std::vector<int> cyc(pu.begin(), pu.begin() + i + 1);
                    for (int k = j - 1; k >= 0; --k) cyc.push_back(pw[k]);
                    res.odd_cycle = std::move(cyc);
                    return res;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
    res.bipartition = std::move(bp);
    return res;
}

StructuralReport structural_report(const Graph& g) {
    const int n = g.vertex_count();
    StructuralReport r;
    r.bipartition = find_bipartition(g).bipartition;
    if (n == 0) {
        r.connected = true;
        return r;
    }
    std::vector<int> ecc(n, 0);
    bool connected = true;
    for (int v = 0; v < n && connected; ++v) {
        auto dist = bfs_distances(g, v);
        for (int w = 0; w < n; ++w) {
            if (dist[w] == kInfinite) {
                connected = false;
                break;
            }
            ecc[v] = std::max(ecc[v], dist[w]);
        }
    }
    r.connected = connected;
    if (!connected) return r;
    r.radius = *std::min_element(ecc.begin(), ecc.end());
    r.diameter = *std::max_element(ecc.begin(), ecc.end());
    for (int v = 0; v < n; ++v) {
        if (ecc[v] == r.radius) {
            r.center = v;
            break;
        }
    }
    return r;
}

std::vector<int> common_neighbours(const Graph& g, int u, int v) {
    std::vector<int> out;
    const auto& a = g.neighbours(u);
    const auto& b = g.neighbours(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbours(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string kind;
        iss >> kind;
        if (kind == "p") {
            if (n != -1)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate header");
            if (!(iss >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
        } else if (kind == "e") {
            if (n == -1)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(iss >> u >> v))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                         ": edge endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown line type '" +
                                     kind + "'");
        }
    }
    if (n == -1) throw std::invalid_argument("missing 'p <n> <m>' header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string write_graph_string(const Graph& g) {
    std::ostringstream os;
    write_graph(g, os);
    return os.str();
}

}  // namespace mcut
