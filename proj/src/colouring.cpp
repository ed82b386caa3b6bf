#include "mcut/colouring.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcut/matching.hpp"

namespace mcut {

std::string colouring_to_string(const Colouring& c) {
    std::string s;
    s.reserve(c.size());
    for (Colour x : c) s.push_back(x == Colour::Red ? 'R' : 'B');
    return s;
}

Colouring colouring_from_string(const std::string& s) {
    Colouring c;
    c.reserve(s.size());
    for (char ch : s) {
        if (ch == 'R')
            c.push_back(Colour::Red);
        else if (ch == 'B')
            c.push_back(Colour::Blue);
        else
            throw std::invalid_argument(std::string("bad colour character '") + ch + "'");
    }
    return c;
}

PartialColouring PartialColouring::from_sets(int n, const std::vector<int>& red,
                                             const std::vector<int>& blue) {
    PartialColouring pc(n);
    for (int v : red) {
        if (v < 0 || v >= n) throw std::invalid_argument("red vertex out of range");
        pc.state_[v] = kRed;
    }
    for (int v : blue) {
        if (v < 0 || v >= n) throw std::invalid_argument("blue vertex out of range");
        if (pc.state_[v] == kRed) throw std::invalid_argument("vertex coloured both red and blue");
        pc.state_[v] = kBlue;
    }
    return pc;
}

std::vector<int> PartialColouring::red_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (state_[v] == kRed) out.push_back(v);
    return out;
}

std::vector<int> PartialColouring::blue_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (state_[v] == kBlue) out.push_back(v);
    return out;
}

std::vector<int> PartialColouring::uncoloured_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (state_[v] == kNone) out.push_back(v);
    return out;
}

int PartialColouring::uncoloured_count() const {
    int k = 0;
    for (auto s : state_)
        if (s == kNone) ++k;
    return k;
}

Colouring PartialColouring::to_colouring() const {
    Colouring c(size());
    for (int v = 0; v < size(); ++v) {
        if (state_[v] == kNone) throw std::logic_error("to_colouring on partial assignment");
        c[v] = (state_[v] == kRed ? Colour::Red : Colour::Blue);
    }
    return c;
}

namespace {

// Shared fixpoint driver. Rules fire one at a time, vertices scanned in
// ascending id, contradiction checks before forcing moves; after every move
// the cascade restarts so the trace is deterministic.
std::optional<PartialColouring> run_rules(const Graph& g, PartialColouring pc, int d, bool perfect,
                                          PropagationStats* stats) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const int n = g.vertex_count();
    if (pc.size() != n) throw std::invalid_argument("colouring size mismatch");
    std::vector<int> red_cnt(n, 0), blue_cnt(n, 0);  // coloured neighbours by colour
    for (int v = 0; v < n; ++v) {
        if (!pc.is_coloured(v)) continue;
        for (int w : g.neighbours(v)) (pc.is_red(v) ? red_cnt[w] : blue_cnt[w])++;
    }
    auto note = [&] {
        if (stats) stats->rule_applications++;
    };
    auto colour = [&](int v, Colour c) {
        pc.set(v, c);
        for (int w : g.neighbours(v)) (c == Colour::Red ? red_cnt[w] : blue_cnt[w])++;
        note();
    };

    for (;;) {
        bool applied = false;
        // R1: too many neighbours of one colour kills a vertex outright.
        for (int v = 0; v < n; ++v) {
            if (pc.is_uncoloured(v)) {
                if (red_cnt[v] >= d + 1 && blue_cnt[v] >= d + 1) { note(); return std::nullopt; }
            } else if (pc.is_red(v)) {
                if (blue_cnt[v] >= d + 1) { note(); return std::nullopt; }
            } else {
                if (red_cnt[v] >= d + 1) { note(); return std::nullopt; }
            }
        }
        // R2: d+1 neighbours of one colour force that colour.
        for (int v = 0; v < n && !applied; ++v) {
            if (!pc.is_uncoloured(v)) continue;
            if (red_cnt[v] >= d + 1) {
                colour(v, Colour::Red);
                applied = true;
            } else if (blue_cnt[v] >= d + 1) {
                colour(v, Colour::Blue);
                applied = true;
            }
        }
        if (applied) continue;
        if (perfect) {
            // R3: a coloured vertex whose entire neighbourhood already shares
            // its colour can never gain its one opposite partner.
            for (int v = 0; v < n; ++v) {
                if (pc.is_red(v) && red_cnt[v] == g.degree(v)) { note(); return std::nullopt; }
                if (pc.is_blue(v) && blue_cnt[v] == g.degree(v)) { note(); return std::nullopt; }
            }
            // R4: a neighbour that already has its opposite partner forces its
            // own colour on the rest of its neighbourhood.
            for (int v = 0; v < n && !applied; ++v) {
                if (!pc.is_uncoloured(v)) continue;
                for (int w : g.neighbours(v)) {
                    if (pc.is_red(w) && blue_cnt[w] >= 1) {
                        colour(v, Colour::Red);
                        applied = true;
                        break;
                    }
                    if (pc.is_blue(w) && red_cnt[w] >= 1) {
                        colour(v, Colour::Blue);
                        applied = true;
                        break;
                    }
                }
            }
            if (applied) continue;
        }
        return pc;
    }
}

}  // namespace

std::optional<PartialColouring> apply_rules_r1_r2(const Graph& g, PartialColouring pc, int d,
                                                  PropagationStats* stats) {
    return run_rules(g, std::move(pc), d, false, stats);
}

std::optional<PartialColouring> apply_rules_r1_r4(const Graph& g, PartialColouring pc,
                                                  PropagationStats* stats) {
    return run_rules(g, std::move(pc), 1, true, stats);
}

bool is_valid_d_colouring(const Graph& g, const Colouring& c, int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const int n = g.vertex_count();
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("colouring size mismatch");
    bool red = false, blue = false;
    for (Colour x : c) (x == Colour::Red ? red : blue) = true;
    if (!red || !blue) return false;
    for (int v = 0; v < n; ++v) {
        int opp = 0;
        for (int w : g.neighbours(v))
            if (c[w] != c[v]) ++opp;
        if (opp > d) return false;
    }
    return true;
}

bool is_perfect_colouring(const Graph& g, const Colouring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("colouring size mismatch");
    if (n == 0) return false;
    for (int v = 0; v < n; ++v) {
        int opp = 0;
        for (int w : g.neighbours(v))
            if (c[w] != c[v]) ++opp;
        if (opp != 1) return false;
    }
    return true;
}

bool is_perfect_extendable(const Graph& g, const Colouring& c) {
    if (!is_valid_d_colouring(g, c, 1))
        throw std::invalid_argument("is_perfect_extendable requires a valid 1-colouring");
    const int n = g.vertex_count();
    std::vector<bool> removed(n, false);
    for (auto [u, v] : g.edges())
        if (c[u] != c[v]) removed[u] = removed[v] = true;
    // Residual graph on the unmatched vertices, reindexed densely.
    std::vector<int> id(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) id[v] = k++;
    std::vector<std::pair<int, int>> redges;
    for (auto [u, v] : g.edges())
        if (!removed[u] && !removed[v]) redges.emplace_back(id[u], id[v]);
    return has_perfect_matching(Graph(k, redges));
}

int colouring_value(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("colouring size mismatch");
    int value = 0;
    for (auto [u, v] : g.edges())
        if (c[u] != c[v]) ++value;
    return value;
}

CutCertificate cut_from_colouring(const Graph& g, const Colouring& c) {
    if (!is_valid_d_colouring(g, c, 1))
        throw std::invalid_argument("cut_from_colouring requires a valid 1-colouring");
    CutCertificate cert;
    for (auto [u, v] : g.edges())
        if (c[u] != c[v]) cert.cut.emplace_back(u, v);
    for (int v = 0; v < g.vertex_count(); ++v)
        (c[v] == Colour::Red ? cert.side_a : cert.side_b).push_back(v);
    return cert;
}

Colouring colouring_from_cut(const Graph& g, const CutCertificate& cert) {
    const int n = g.vertex_count();
    std::vector<int> seen(n, 0);
    Colouring c(n, Colour::Red);
    for (int v : cert.side_a) {
        if (v < 0 || v >= n) throw std::invalid_argument("side_a vertex out of range");
        seen[v]++;
        c[v] = Colour::Red;
    }
    for (int v : cert.side_b) {
        if (v < 0 || v >= n) throw std::invalid_argument("side_b vertex out of range");
        seen[v]++;
        c[v] = Colour::Blue;
    }
    for (int v = 0; v < n; ++v)
        if (seen[v] != 1) throw std::invalid_argument("sides do not partition the vertex set");
    // The certificate must list exactly the crossing edges it induces.
    std::vector<std::pair<int, int>> cross;
    for (auto [u, v] : g.edges())
        if (c[u] != c[v]) cross.emplace_back(u, v);
    std::vector<std::pair<int, int>> given = cert.cut;
    for (auto& e : given)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(given.begin(), given.end());
    if (given != cross) throw std::invalid_argument("cut edges do not match the side partition");
    return c;
}

}  // namespace mcut
