#include "mcut/solvers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcut/errors.hpp"
#include "mcut/subroutines.hpp"

namespace mcut {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::MatchingCut: return "mc";
        case Problem::PerfectMatchingCut: return "pmc";
        case Problem::DisconnectedPerfectMatching: return "dpm";
        case Problem::DCut: return "dcut";
        case Problem::MaxMatchingCut: return "maxmc";
        case Problem::MaxDisconnectedPerfectMatching: return "maxdpm";
    }
    return "?";
}

namespace {

struct ClassInfo {
    StructuralReport report;
    Bipartition bip;
    std::vector<char> in_v1;  // side_a membership
};

// diameter_limit / radius_limit of -1 means unconstrained.
ClassInfo require_bipartite_class(const Graph& g, const char* who, int diameter_limit,
                                  int radius_limit, bool enforce) {
    ClassInfo ci;
    ci.report = structural_report(g);
    if (!ci.report.connected)
        throw ClassViolationError(std::string(who) + ": graph must be connected");
    if (!ci.report.bipartition)
        throw ClassViolationError(std::string(who) + ": graph must be bipartite");
    if (enforce && g.vertex_count() >= 2) {
        if (diameter_limit >= 0 && ci.report.diameter > diameter_limit)
            throw ClassViolationError(std::string(who) + ": graph must have diameter at most " +
                                      std::to_string(diameter_limit));
        if (radius_limit >= 0 && ci.report.radius > radius_limit)
            throw ClassViolationError(std::string(who) + ": graph must have radius at most " +
                                      std::to_string(radius_limit));
    }
    ci.bip = *ci.report.bipartition;
    ci.in_v1.assign(g.vertex_count(), 0);
    for (int v : ci.bip.side_a) ci.in_v1[v] = 1;
    return ci;
}

// Calls fn on every subset of pool with at most k members, ordered by size and
// then lexicographically by member positions. Stops early when fn returns
// true; the return value says whether that happened.
template <class F>
bool for_each_small_subset(const std::vector<int>& pool, int k, F&& fn) {
    const int n = static_cast<int>(pool.size());
    k = std::min(k, n);
    std::vector<int> members;
    if (k >= 0 && fn(std::as_const(members))) return true;
    std::vector<int> idx;
    for (int s = 1; s <= k; ++s) {
        idx.resize(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            members.clear();
            for (int i : idx) members.push_back(pool[i]);
            if (fn(std::as_const(members))) return true;
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

// Branching engine shared by the diameter-3 d-cut and maximisation solvers.
// Seeds the search on vertex 0's neighbourhood, propagates the forcing rules,
// and then eliminates the uncoloured zone by case analysis on whether it is
// connected. Every leaf handed to the callback is a valid d-colouring, and
// every valid colouring with vertex 0 blue reaches the callback exactly once.
// The callback returns true to stop the search.
class ZoneSolver {
public:
    ZoneSolver(const Graph& g, int d, const std::vector<char>& in_v1, SolveStats& stats)
        : g_(g), d_(d), in_v1_(in_v1), stats_(stats) {}

    template <class F>
    bool run(F&& leaf) {
        leaf_ = std::forward<F>(leaf);
        const int n = g_.vertex_count();
        if (n < 2) return false;
        const std::vector<int>& nbrs = g_.neighbours(0);
        return for_each_small_subset(nbrs, d_, [&](const std::vector<int>& red) {
            PartialColouring pc(n);
            pc.set(0, Colour::Blue);
            for (int w : nbrs) pc.set(w, Colour::Blue);
            for (int w : red) pc.set(w, Colour::Red);
            ++stats_.branches;
            return propagate_and_dispatch(pc);
        });
    }

private:
    bool propagate_and_dispatch(const PartialColouring& pc0) {
        PropagationStats ps;
        auto next = apply_rules_r1_r2(g_, pc0, d_, &ps);
        stats_.rule_applications += ps.rule_applications;
        if (!next) return false;
        return dispatch(*next);
    }

    bool dispatch(const PartialColouring& pc) {
        std::vector<int> zs = pc.uncoloured_vertices();
        if (zs.empty()) return emit(pc);
        auto comps = zone_components(zs);
        if (comps.size() >= 2) return split_zone(pc, comps);
        return connected_zone(pc, zs);
    }

    bool emit(const PartialColouring& pc) {
        Colouring c = pc.to_colouring();
        if (!is_valid_d_colouring(g_, c, d_)) return false;
        return leaf_(c);
    }

    // Components of the graph induced on zs, ordered by smallest member.
    std::vector<std::vector<int>> zone_components(const std::vector<int>& zs) {
        std::vector<char> in_z(g_.vertex_count(), 0), seen(g_.vertex_count(), 0);
        for (int z : zs) in_z[z] = 1;
        std::vector<std::vector<int>> comps;
        for (int z : zs) {
            if (seen[z]) continue;
            std::vector<int> comp{z};
            seen[z] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (int w : g_.neighbours(comp[head]))
                    if (in_z[w] && !seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // A freshly assigned vertex may not push itself or a neighbour over the
    // opposite-colour budget.
    bool capacity_ok(const PartialColouring& pc, int v) const {
        auto opposite_count = [&](int x) {
            int cnt = 0;
            for (int w : g_.neighbours(x))
                if (pc.is_coloured(w) && pc.is_red(w) != pc.is_red(x)) ++cnt;
            return cnt;
        };
        if (opposite_count(v) > d_) return false;
        for (int w : g_.neighbours(v))
            if (pc.is_coloured(w) && pc.is_red(w) != pc.is_red(v) && opposite_count(w) > d_)
                return false;
        return true;
    }

    bool enumerate_rest(PartialColouring pc, const std::vector<int>& order, std::size_t idx) {
        if (idx == order.size()) return emit(pc);
        for (Colour col : {Colour::Red, Colour::Blue}) {
            pc.set(order[idx], col);
            ++stats_.branches;
            if (!capacity_ok(pc, order[idx])) continue;
            if (enumerate_rest(pc, order, idx + 1)) return true;
        }
        return false;
    }

    // The zone splits into several components.
    bool split_zone(const PartialColouring& pc, const std::vector<std::vector<int>>& comps) {
        if (comps.size() == 2 && comps[0].size() == 1 && comps[1].size() == 1) {
            const int z1 = comps[0][0], z2 = comps[1][0];
            for (Colour c1 : {Colour::Red, Colour::Blue})
                for (Colour c2 : {Colour::Red, Colour::Blue}) {
                    PartialColouring pc2 = pc;
                    pc2.set(z1, c1);
                    pc2.set(z2, c2);
                    ++stats_.branches;
                    if (emit(pc2)) return true;
                }
            return false;
        }
        // A multi-vertex component meets both sides, so one side meets at
        // least two components; exhaust that side first.
        std::vector<int> a, b;
        int hits_a = 0, hits_b = 0;
        for (const auto& comp : comps) {
            bool ca = false, cb = false;
            for (int z : comp) (in_v1_[z] ? ca : cb) = true;
            hits_a += ca;
            hits_b += cb;
        }
        for (const auto& comp : comps)
            for (int z : comp) (in_v1_[z] ? a : b).push_back(z);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<int> order;
        if (hits_a >= 2) {
            order = a;
            order.insert(order.end(), b.begin(), b.end());
        } else {
            order = b;
            order.insert(order.end(), a.begin(), a.end());
        }
        return enumerate_rest(pc, order, 0);
    }

    // The zone is connected. Branch the far part of one side if some side has
    // no vertex within zone-distance 2 of all of it; otherwise colour the
    // closed zone neighbourhoods of one dominator per side and recurse.
    bool connected_zone(const PartialColouring& pc, const std::vector<int>& zs) {
        const int n = g_.vertex_count();
        std::vector<char> in_z(n, 0);
        for (int z : zs) in_z[z] = 1;

        auto zone_dist = [&](int from) {
            std::vector<int> dist(n, -1);
            dist[from] = 0;
            std::vector<int> queue{from};
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (int w : g_.neighbours(queue[head]))
                    if (in_z[w] && dist[w] == -1) {
                        dist[w] = dist[queue[head]] + 1;
                        queue.push_back(w);
                    }
            return dist;
        };
        auto far_set = [&](int u, const std::vector<int>& side) {
            auto dist = zone_dist(u);
            std::vector<int> far;
            for (int x : side)
                if (dist[x] == -1 || dist[x] > 2) far.push_back(x);
            return far;
        };
        // Smallest vertex whose zone-distance-2 ball covers its side, else the
        // smallest side vertex together with what it fails to cover.
        auto pick = [&](const std::vector<int>& side) {
            for (int u : side) {
                auto far = far_set(u, side);
                if (far.empty()) return std::make_pair(u, far);
            }
            return std::make_pair(side[0], far_set(side[0], side));
        };

        std::vector<int> a, b;
        for (int z : zs) (in_v1_[z] ? a : b).push_back(z);

        int u = -1, v = -1;
        if (!a.empty()) {
            auto [x, far] = pick(a);
            if (!far.empty()) return branch_far(pc, far, 0);
            u = x;
        }
        if (!b.empty()) {
            auto [x, far] = pick(b);
            if (!far.empty()) return branch_far(pc, far, 0);
            v = x;
        }

        struct Centre {
            int c;
            std::vector<int> nbrs;  // zone neighbours
        };
        std::vector<Centre> plan;
        for (int c : {u, v}) {
            if (c == -1) continue;
            std::vector<int> nbrs;
            for (int w : g_.neighbours(c))
                if (in_z[w]) nbrs.push_back(w);
            plan.push_back({c, std::move(nbrs)});
        }

        auto try_set = [&](PartialColouring& p, int x, Colour c) {
            if (p.is_coloured(x)) return p.is_red(x) == (c == Colour::Red);
            p.set(x, c);
            return true;
        };
        // For each centre: its colour, plus the exact set of zone neighbours
        // taking the opposite colour (at most d of them).
        auto go = [&](auto&& self, std::size_t i, const PartialColouring& p) -> bool {
            if (i == plan.size()) return propagate_and_dispatch(p);
            for (Colour cc : {Colour::Red, Colour::Blue}) {
                bool stop = for_each_small_subset(plan[i].nbrs, d_, [&](const std::vector<int>& opp) {
                    PartialColouring q = p;
                    ++stats_.branches;
                    if (!try_set(q, plan[i].c, cc)) return false;
                    for (int w : plan[i].nbrs) {
                        bool is_opp = std::find(opp.begin(), opp.end(), w) != opp.end();
                        if (!try_set(q, w, is_opp ? opposite(cc) : cc)) return false;
                    }
                    return self(self, i + 1, q);
                });
                if (stop) return true;
            }
            return false;
        };
        return go(go, 0, pc);
    }

    bool branch_far(PartialColouring pc, const std::vector<int>& far, std::size_t idx) {
        if (idx == far.size()) return propagate_and_dispatch(pc);
        for (Colour col : {Colour::Red, Colour::Blue}) {
            pc.set(far[idx], col);
            ++stats_.branches;
            if (!capacity_ok(pc, far[idx])) continue;
            if (branch_far(pc, far, idx + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    const int d_;
    const std::vector<char>& in_v1_;
    SolveStats& stats_;
    std::function<bool(const Colouring&)> leaf_;
};

void fill_yes(SolveResult& res, const Graph& g, Colouring c) {
    res.yes = true;
    res.value = colouring_value(g, c);
    res.colouring = std::move(c);
}

// Shared by the maximisation solvers: keep the best (value, lexicographically
// smallest string) candidate.
struct BestTracker {
    std::optional<Colouring> colouring;
    std::string key;
    int value = -1;

    void offer(const Colouring& c, int v) {
        std::string k = colouring_to_string(c);
        if (!colouring || v > value || (v == value && k < key)) {
            colouring = c;
            value = v;
            key = std::move(k);
        }
    }
};

}  // namespace

SolveResult pmc_bipartite_diam3(const Graph& g, bool enforce_class) {
    auto ci = require_bipartite_class(g, "pmc_bipartite_diam3", 3, -1, enforce_class);
    const int n = g.vertex_count();
    SolveResult res;

    if (ci.bip.side_a.size() <= 1 || ci.bip.side_b.size() <= 1) {
        // Only the single edge works: with one side reduced to one vertex, a
        // perfect colouring forces every vertex to have degree 1.
        if (n == 2) {
            Colouring c(n);
            for (int v = 0; v < n; ++v) c[v] = ci.in_v1[v] ? Colour::Red : Colour::Blue;
            fill_yes(res, g, std::move(c));
        }
        return res;
    }

    // Edges oriented as (side_a endpoint, side_b endpoint).
    std::vector<std::pair<int, int>> oe;
    for (auto [x, y] : g.edges()) oe.emplace_back(ci.in_v1[x] ? std::pair{x, y} : std::pair{y, x});

    // Phase 1: a perfect colouring giving side_a both colours has two disjoint
    // bichromatic edges with opposite orientations; seed both and finish the
    // zone component-wise.
    const int m = static_cast<int>(oe.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [u1, v1] = oe[i];
            auto [u2, v2] = oe[j];
            if (u1 == u2 || v1 == v2) continue;
            PartialColouring pc(n);
            pc.set(u1, Colour::Red);
            pc.set(v1, Colour::Blue);
            pc.set(u2, Colour::Blue);
            pc.set(v2, Colour::Red);
            ++res.stats.branches;
            PropagationStats ps;
            auto next = apply_rules_r1_r4(g, pc, &ps);
            res.stats.rule_applications += ps.rule_applications;
            if (!next) continue;
            if (auto c = perfect_mono_components(g, *next)) {
                fill_yes(res, g, std::move(*c));
                return res;
            }
        }

    // Phase 2: side_a monochromatic. Seed one bichromatic edge, propagate, and
    // complete by class.
    for (auto [x, y] : oe) {
        PartialColouring pc(n);
        pc.set(x, Colour::Red);
        pc.set(y, Colour::Blue);
        ++res.stats.branches;
        PropagationStats ps;
        auto next = apply_rules_r1_r4(g, pc, &ps);
        res.stats.rule_applications += ps.rule_applications;
        if (!next) continue;
        PartialColouring q = *next;
        for (int w = 0; w < n; ++w)
            if (q.is_uncoloured(w)) q.set(w, ci.in_v1[w] ? Colour::Red : Colour::Blue);
        Colouring c = q.to_colouring();
        if (is_perfect_colouring(g, c)) {
            fill_yes(res, g, std::move(c));
            return res;
        }
    }
    return res;
}

SolveResult dcut_bipartite_diam3(const Graph& g, int d, bool enforce_class) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    auto ci = require_bipartite_class(g, "dcut_bipartite_diam3", 3, -1, enforce_class);
    SolveResult res;
    std::optional<Colouring> found;
    ZoneSolver zone(g, d, ci.in_v1, res.stats);
    zone.run([&](const Colouring& c) {
        found = c;
        return true;
    });
    if (found) fill_yes(res, g, std::move(*found));
    return res;
}

SolveResult maxmc_bipartite_diam3(const Graph& g, bool enforce_class) {
    auto ci = require_bipartite_class(g, "maxmc_bipartite_diam3", 3, -1, enforce_class);
    SolveResult res;
    BestTracker best;
    ZoneSolver zone(g, 1, ci.in_v1, res.stats);
    zone.run([&](const Colouring& c) {
        best.offer(c, colouring_value(g, c));
        return false;
    });
    if (best.colouring) fill_yes(res, g, std::move(*best.colouring));
    return res;
}

SolveResult maxdpm_bipartite_diam3(const Graph& g, bool enforce_class) {
    auto ci = require_bipartite_class(g, "maxdpm_bipartite_diam3", 3, -1, enforce_class);
    SolveResult res;
    if (g.vertex_count() % 2 == 1) return res;  // no perfect matching to extend to
    BestTracker best;
    ZoneSolver zone(g, 1, ci.in_v1, res.stats);
    zone.run([&](const Colouring& c) {
        if (is_perfect_extendable(g, c)) best.offer(c, colouring_value(g, c));
        return false;
    });
    if (best.colouring) fill_yes(res, g, std::move(*best.colouring));
    return res;
}

SolveResult dcut_bipartite_rad2(const Graph& g, int d, bool enforce_class) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    auto ci = require_bipartite_class(g, "dcut_bipartite_rad2", -1, 2, enforce_class);
    const int n = g.vertex_count();
    SolveResult res;
    if (n < 2) return res;

    const int centre = ci.report.center;
    const std::vector<int>& cn = g.neighbours(centre);
    std::vector<char> in_ncl(n, 0);
    in_ncl[centre] = 1;
    for (int w : cn) in_ncl[w] = 1;
    std::vector<int> shell;
    for (int v = 0; v < n; ++v)
        if (!in_ncl[v]) shell.push_back(v);

    std::optional<Colouring> found;
    auto verify = [&](const Colouring& c) {
        if (!is_valid_d_colouring(g, c, d)) return false;
        found = c;
        return true;
    };

    // With the centre blue, a red side can be assumed connected: flipping all
    // but one red component blue never invalidates the colouring. A connected
    // red side lies inside the closed neighbourhood of the centre's red
    // neighbours, or is a single shell vertex.
    bool stop = for_each_small_subset(cn, d, [&](const std::vector<int>& reds) {
        ++res.stats.branches;
        if (reds.empty()) {
            for (int w : shell) {
                ++res.stats.branches;
                Colouring c(n, Colour::Blue);
                c[w] = Colour::Red;
                if (verify(c)) return true;
            }
            return false;
        }
        // st: 0 undecided shell, 1 red, 2 blue.
        std::vector<signed char> st(n, 0);
        // Each red centre-neighbour spends one unit of its opposite budget on
        // the centre; branch which of its shell neighbours are blue and force
        // the rest red.
        auto per_red = [&](auto&& self, std::size_t i, std::vector<signed char> cur) -> bool {
            if (i == reds.size()) {
                Colouring c(n, Colour::Blue);
                for (int r : reds) c[r] = Colour::Red;
                for (int v : shell)
                    if (cur[v] == 1) c[v] = Colour::Red;
                ++res.stats.branches;
                return verify(c);
            }
            const int r = reds[i];
            int already_blue = 0;
            std::vector<int> undecided;
            for (int w : g.neighbours(r)) {
                if (w == centre) continue;
                if (cur[w] == 2) ++already_blue;
                else if (cur[w] == 0) undecided.push_back(w);
            }
            const int budget = d - 1 - already_blue;
            if (budget < 0) return false;
            return for_each_small_subset(undecided, budget, [&](const std::vector<int>& blues) {
                std::vector<signed char> nxt = cur;
                for (int w : blues) nxt[w] = 2;
                for (int w : undecided)
                    if (nxt[w] == 0) nxt[w] = 1;
                ++res.stats.branches;
                return self(self, i + 1, std::move(nxt));
            });
        };
        return per_red(per_red, 0, st);
    });
    (void)stop;
    if (found) fill_yes(res, g, std::move(*found));
    return res;
}

namespace {

SolveResult max_rad2(const Graph& g, bool extendable, const char* who, bool enforce_class) {
    auto ci = require_bipartite_class(g, who, -1, 2, enforce_class);
    const int n = g.vertex_count();
    SolveResult res;
    if (n < 2) return res;
    if (extendable && n % 2 == 1) return res;

    const int centre = ci.report.center;
    const std::vector<int>& cn = g.neighbours(centre);
    BestTracker best;

    // After each seed the uncoloured vertices sit in the distance-2 shell,
    // which shares the centre's side and is therefore independent; the
    // independent-zone subroutines finish exactly.
    auto run_branch = [&](PartialColouring pc) {
        ++res.stats.branches;
        PropagationStats ps;
        auto next = apply_rules_r1_r2(g, pc, 1, &ps);
        res.stats.rule_applications += ps.rule_applications;
        if (!next) return;
        auto got = extendable ? max_extendable_independent_z(g, *next)
                              : max_valid_independent_z(g, *next);
        if (got) best.offer(got->colouring, got->value);
    };

    // The centre has exactly one red neighbour...
    for (int u : cn) {
        PartialColouring pc(n);
        pc.set(centre, Colour::Blue);
        for (int w : cn) pc.set(w, w == u ? Colour::Red : Colour::Blue);
        run_branch(std::move(pc));
    }
    // ... or none, and then some shell vertex is red.
    for (int w = 0; w < n; ++w) {
        if (w == centre || g.has_edge(centre, w)) continue;
        PartialColouring pc(n);
        pc.set(centre, Colour::Blue);
        for (int x : cn) pc.set(x, Colour::Blue);
        pc.set(w, Colour::Red);
        run_branch(std::move(pc));
    }

    if (best.colouring) fill_yes(res, g, std::move(*best.colouring));
    return res;
}

}  // namespace

SolveResult maxmc_bipartite_rad2(const Graph& g, bool enforce_class) {
    return max_rad2(g, false, "maxmc_bipartite_rad2", enforce_class);
}

SolveResult maxdpm_bipartite_rad2(const Graph& g, bool enforce_class) {
    return max_rad2(g, true, "maxdpm_bipartite_rad2", enforce_class);
}

}  // namespace mcut
