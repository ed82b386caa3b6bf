#include "mcut/subroutines.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcut {

namespace {

void require_fixpoint_r1_r4(const Graph& g, const PartialColouring& pc) {
    auto processed = apply_rules_r1_r4(g, pc);
    if (!processed || !(*processed == pc))
        throw std::invalid_argument("partial colouring is not colour-processed");
}

void require_fixpoint_r1_r2(const Graph& g, const PartialColouring& pc) {
    auto processed = apply_rules_r1_r2(g, pc, 1);
    if (!processed || !(*processed == pc))
        throw std::invalid_argument("partial colouring is not colour-processed");
}

std::vector<std::vector<int>> uncoloured_components(const Graph& g, const PartialColouring& pc) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (pc.is_coloured(s) || comp[s] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : g.neighbours(u)) {
                if (!pc.is_coloured(w) && comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

}  // namespace

std::optional<Colouring> perfect_mono_components(const Graph& g, const PartialColouring& pc) {
    require_fixpoint_r1_r4(g, pc);
    const int n = g.vertex_count();
    auto comps = uncoloured_components(g, pc);
    const int k = static_cast<int>(comps.size());
    std::vector<int> comp_of(n, -1);
    for (int i = 0; i < k; ++i)
        for (int v : comps[i]) comp_of[v] = i;

    std::vector<int> red_cnt(n, 0), blue_cnt(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!pc.is_coloured(v)) continue;
        for (int w : g.neighbours(v)) (pc.is_red(v) ? red_cnt[w] : blue_cnt[w])++;
    }

    // Allowed colours per component: red needs every member to see exactly one
    // blue coloured vertex, and symmetrically.
    constexpr int kRedBit = 1, kBlueBit = 2;
    std::vector<int> allowed(k, kRedBit | kBlueBit);
    for (int i = 0; i < k; ++i) {
        for (int v : comps[i]) {
            if (blue_cnt[v] != 1) allowed[i] &= ~kRedBit;
            if (red_cnt[v] != 1) allowed[i] &= ~kBlueBit;
        }
        if (allowed[i] == 0) return std::nullopt;
    }

    // A coloured vertex that already has its opposite partner keeps every
    // adjacent component on its own colour.
    for (int v = 0; v < n; ++v) {
        if (!pc.is_coloured(v)) continue;
        int own = pc.is_red(v) ? kRedBit : kBlueBit;
        int opp_seen = pc.is_red(v) ? blue_cnt[v] : red_cnt[v];
        if (opp_seen == 0) continue;
        for (int w : g.neighbours(v)) {
            if (pc.is_coloured(w)) continue;
            allowed[comp_of[w]] &= own;
            if (allowed[comp_of[w]] == 0) return std::nullopt;
        }
    }

    // Coloured vertices still missing their partner need exactly one
    // opposite-coloured uncoloured neighbour; propagate the consequences.
    struct Pending {
        int v;
        int want;  // colour bit the adjacent components must supply once
    };
    std::vector<Pending> pend;
    for (int v = 0; v < n; ++v) {
        if (!pc.is_coloured(v)) continue;
        int opp_seen = pc.is_red(v) ? blue_cnt[v] : red_cnt[v];
        if (opp_seen == 0) pend.push_back({v, pc.is_red(v) ? kBlueBit : kRedBit});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : pend) {
            // Multiplicity of p.v's uncoloured neighbours per adjacent component.
            int supplied = 0, open_weight = 0, open_comp = -1, open_comp_weight = 0;
            std::vector<std::pair<int, int>> weights;  // (component, multiplicity)
            for (int w : g.neighbours(p.v)) {
                if (pc.is_coloured(w)) continue;
                int ci = comp_of[w];
                bool found = false;
                for (auto& [c, m] : weights)
                    if (c == ci) { ++m; found = true; }
                if (!found) weights.emplace_back(ci, 1);
            }
            int open_comps = 0;
            for (auto [c, m] : weights) {
                if (allowed[c] == p.want) supplied += m;
                else if (allowed[c] == (kRedBit | kBlueBit)) {
                    open_weight += m;
                    open_comp = c;
                    open_comp_weight = m;
                    ++open_comps;
                }
            }
            if (supplied > 1) return std::nullopt;
            if (supplied == 1) {
                // Partner committed; everything else adjacent must match p.v.
                int own = p.want == kRedBit ? kBlueBit : kRedBit;
                for (auto [c, m] : weights) {
                    if (allowed[c] == (kRedBit | kBlueBit)) {
                        allowed[c] = own;
                        changed = true;
                    }
                }
            } else {
                if (open_weight == 0) return std::nullopt;
                if (open_weight == 1) {
                    allowed[open_comp] = p.want;
                    changed = true;
                } else if (open_comps == 1 && open_comp_weight > 1) {
                    // The only candidate component would supply more than one
                    // partner if it took p.want, and none otherwise.
                    return std::nullopt;
                }
            }
        }
    }

    // Exhaustive search over the components still free, smallest-vertex order;
    // every candidate is verified from scratch.
    std::vector<int> free_comps;
    for (int i = 0; i < k; ++i)
        if (allowed[i] == (kRedBit | kBlueBit)) free_comps.push_back(i);
    const int f = static_cast<int>(free_comps.size());
    if (f > 30) throw std::runtime_error("undetermined component count too large");
    Colouring cand(n, Colour::Blue);
    for (int v = 0; v < n; ++v)
        if (pc.is_red(v)) cand[v] = Colour::Red;
    for (long long mask = 0; mask < (1LL << f); ++mask) {
        for (int i = 0; i < k; ++i) {
            Colour col = (allowed[i] & kRedBit) ? Colour::Red : Colour::Blue;
            if (allowed[i] == (kRedBit | kBlueBit)) {
                int pos = static_cast<int>(std::find(free_comps.begin(), free_comps.end(), i) -
                                           free_comps.begin());
                col = (mask >> pos & 1) ? Colour::Red : Colour::Blue;
            }
            for (int v : comps[i]) cand[v] = col;
        }
        if (is_perfect_colouring(g, cand)) return cand;
    }
    return std::nullopt;
}

namespace {

// Shared structure for the independent-Z maximisation: every uncoloured
// vertex has at most one red and at most one blue coloured neighbour (rule
// fixpoint), so colouring it opposite to a neighbour "charges" that
// neighbour's single unit of opposite capacity.
struct ZProblem {
    std::vector<int> zs;              // uncoloured vertices, ascending
    std::vector<int> red_nbr;         // per vertex: its red neighbour or -1
    std::vector<int> blue_nbr;        // per vertex: its blue neighbour or -1
    std::vector<int> cap;             // residual opposite capacity per coloured vertex
    int base_value = 0;               // bichromatic edges among coloured pairs
};

ZProblem build_z_problem(const Graph& g, const PartialColouring& pc) {
    const int n = g.vertex_count();
    ZProblem zp;
    zp.red_nbr.assign(n, -1);
    zp.blue_nbr.assign(n, -1);
    zp.cap.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        if (!pc.is_coloured(u) && !pc.is_coloured(v))
            throw std::invalid_argument("uncoloured set is not independent");
        if (pc.is_coloured(u) && pc.is_coloured(v) && pc.is_red(u) != pc.is_red(v))
            zp.base_value++;
    }
    std::vector<int> opp(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!pc.is_coloured(v)) continue;
        for (int w : g.neighbours(v)) {
            if (pc.is_coloured(w) && pc.is_red(w) != pc.is_red(v)) ++opp[v];
            if (!pc.is_coloured(w)) (pc.is_red(v) ? zp.red_nbr[w] : zp.blue_nbr[w]) = v;
        }
    }
    for (int v = 0; v < n; ++v)
        if (pc.is_coloured(v)) zp.cap[v] = 1 - opp[v];
    for (int v = 0; v < n; ++v)
        if (!pc.is_coloured(v)) zp.zs.push_back(v);
    return zp;
}

// Maximum number of chargeable vertices, with vertices seeing both colours
// required to charge. fixed[v]: -1 free, 0 forced blue, 1 forced red (only
// consulted for members of zs). Returns charge target per z (or -1), or
// nullopt when some both-colour vertex cannot charge.
std::optional<std::vector<int>> charge_matching(const ZProblem& zp,
                                                const std::vector<int>& fixed,
                                                const std::vector<int>& cap_in, int* matched_out) {
    std::vector<int> cap = cap_in;
    std::vector<int> target(zp.red_nbr.size(), -1);
    // Options per z after fixing: colour blue charges the red neighbour,
    // colour red charges the blue neighbour.
    auto options = [&](int z) {
        std::vector<int> opts;
        int s = zp.red_nbr[z], t = zp.blue_nbr[z];
        bool must = s != -1 && t != -1;
        if (fixed[z] == 0) { if (s != -1) opts.push_back(s); }
        else if (fixed[z] == 1) { if (t != -1) opts.push_back(t); }
        else {
            if (s != -1) opts.push_back(s);
            if (t != -1) opts.push_back(t);
        }
        return std::make_pair(opts, must);
    };
    std::vector<int> owner(zp.red_nbr.size(), -1);  // coloured vertex -> charging z
    // Augmenting search over capacity-1 coloured vertices.
    std::vector<char> visited(zp.red_nbr.size(), 0);
    auto try_charge = [&](auto&& self, int z) -> bool {
        auto [opts, must] = options(z);
        for (int t : opts) {
            if (visited[t]) continue;
            visited[t] = 1;
            if (cap[t] == 0) continue;
            if (owner[t] == -1 || self(self, owner[t])) {
                owner[t] = z;
                target[z] = t;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    // Mandatory chargers first; then optional ones greedily in id order.
    for (int pass = 0; pass < 2; ++pass) {
        for (int z : zp.zs) {
            auto [opts, must] = options(z);
            bool mandatory = must || (fixed[z] == 0 && zp.red_nbr[z] != -1) ||
                             (fixed[z] == 1 && zp.blue_nbr[z] != -1);
            if ((pass == 0) != mandatory) continue;
            std::fill(visited.begin(), visited.end(), 0);
            bool ok = try_charge(try_charge, z);
            if (ok) ++matched;
            else if (mandatory) return std::nullopt;
        }
    }
    if (matched_out) *matched_out = matched;
    return target;
}

Colouring realise(const ZProblem& zp, const PartialColouring& pc,
                  const std::vector<int>& target, const std::vector<int>& fixed) {
    const int n = pc.size();
    Colouring c(n, Colour::Blue);
    for (int v = 0; v < n; ++v)
        if (pc.is_red(v)) c[v] = Colour::Red;
    for (int z : zp.zs) {
        if (target[z] != -1) {
            c[z] = pc.is_red(target[z]) ? Colour::Blue : Colour::Red;
        } else if (fixed[z] == 0) {
            c[z] = Colour::Blue;
        } else if (fixed[z] == 1) {
            c[z] = Colour::Red;
        } else if (zp.red_nbr[z] != -1) {
            c[z] = Colour::Red;  // follow the red neighbour, no new edge
        } else {
            c[z] = Colour::Blue;  // blue neighbour or isolated
        }
    }
    return c;
}

}  // namespace

std::optional<MaxColouringResult> max_valid_independent_z(const Graph& g,
                                                          const PartialColouring& pc) {
    require_fixpoint_r1_r2(g, pc);
    ZProblem zp = build_z_problem(g, pc);
    const int n = g.vertex_count();
    std::vector<int> fixed(n, -1);
    int best = 0;
    auto free_target = charge_matching(zp, fixed, zp.cap, &best);
    if (!free_target) return std::nullopt;

    // Lexicographic refinement: fix each uncoloured vertex to blue when some
    // optimum agrees, otherwise red.
    for (int z : zp.zs) {
        fixed[z] = 0;
        int got = 0;
        auto t = charge_matching(zp, fixed, zp.cap, &got);
        if (!t || got < best) fixed[z] = 1;
    }
    int got = 0;
    auto target = charge_matching(zp, fixed, zp.cap, &got);
    // The all-fixed run reproduces the optimum by construction.
    Colouring c = realise(zp, pc, *target, fixed);
    if (!is_valid_d_colouring(g, c, 1)) {
        // Only reachable when one colour class is empty; an isolated
        // uncoloured vertex can supply the missing colour for free.
        int flip = -1;
        for (int z : zp.zs)
            if (zp.red_nbr[z] == -1 && zp.blue_nbr[z] == -1) flip = z;
        if (flip == -1) return std::nullopt;
        c[flip] = opposite(c[flip]);
        if (!is_valid_d_colouring(g, c, 1)) return std::nullopt;
    }
    return MaxColouringResult{c, colouring_value(g, c)};
}

std::optional<MaxColouringResult> max_extendable_independent_z(const Graph& g,
                                                               const PartialColouring& pc) {
    require_fixpoint_r1_r2(g, pc);
    ZProblem zp = build_z_problem(g, pc);
    if (g.vertex_count() % 2 == 1) return std::nullopt;
    const int n = g.vertex_count();
    std::vector<int> fixed(n, -1);

    std::optional<MaxColouringResult> best;
    // Depth-first over the uncoloured vertices in id order, blue before red:
    // leaves appear in lexicographic order, so the first optimum found is the
    // lexicographically smallest one.
    auto dfs = [&](auto&& self, size_t idx) -> void {
        int matched = 0;
        auto target = charge_matching(zp, fixed, zp.cap, &matched);
        if (!target) return;
        int bound = zp.base_value + matched;
        if (best && bound <= best->value) return;
        if (idx == zp.zs.size()) {
            Colouring c = realise(zp, pc, *target, fixed);
            if (!is_valid_d_colouring(g, c, 1)) return;
            if (!is_perfect_extendable(g, c)) return;
            best = MaxColouringResult{c, colouring_value(g, c)};
            return;
        }
        int z = zp.zs[idx];
        fixed[z] = 0;
        self(self, idx + 1);
        fixed[z] = 1;
        self(self, idx + 1);
        fixed[z] = -1;
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace mcut
