// Acceptance suite: one test case per criterion, each printing a single
// "criterion N: pass|fail" line. Budgets, corpus sizes and time limits are
// pinned here; every comparison is exact (tolerance zero).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "mcut/colouring.hpp"
#include "mcut/errors.hpp"
#include "mcut/oracle.hpp"
#include "mcut/reductions.hpp"
#include "mcut/solvers.hpp"
#include "testutil.hpp"

using namespace mcut;
namespace tu = testutil;

namespace {

struct Tally {
    bool ok = true;
    void require(bool cond) {
        ok &= cond;
        CHECK(cond);
    }
};

class Timer {
public:
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void announce(int idx, Tally& t, const Timer& timer, double limit_secs) {
    double s = timer.secs();
    t.require(s < limit_secs);
    std::cout << "criterion " << idx << ": " << (t.ok ? "pass" : "fail") << " ("
              << std::fixed << std::setprecision(1) << s << "s, limit "
              << std::setprecision(0) << limit_secs << "s)" << std::endl;
}

// One diameter-3 comparison: four solver families against the enumeration
// oracle, witnesses revalidated by the independent reference verifiers.
void compare_diam3(Tally& t, const Graph& g) {
    auto ref = oracle_enumerate(g, 3);

    auto pmc = pmc_bipartite_diam3(g);
    t.require(pmc.yes == ref.has_pmc);
    if (pmc.yes) {
        t.require(tu::ref_perfect(g, *pmc.colouring));
        t.require(*pmc.value == tu::ref_value(g, *pmc.colouring));
    }
    for (int d = 1; d <= 3; ++d) {
        auto r = dcut_bipartite_diam3(g, d);
        t.require(r.yes == ref.has_dcut[d - 1]);
        if (r.yes) t.require(tu::ref_valid(g, *r.colouring, d));
    }
    auto mm = maxmc_bipartite_diam3(g);
    t.require(mm.yes == ref.has_mc);
    if (mm.yes) {
        t.require(*mm.value == ref.max_mc);
        t.require(tu::ref_valid(g, *mm.colouring, 1));
        t.require(tu::ref_value(g, *mm.colouring) == ref.max_mc);
    }
    auto md = maxdpm_bipartite_diam3(g);
    t.require(md.yes == ref.has_dpm);
    if (md.yes) {
        t.require(*md.value == ref.max_dpm);
        t.require(tu::ref_extendable(g, *md.colouring));
        t.require(tu::ref_value(g, *md.colouring) == ref.max_dpm);
    }
}

void compare_rad2(Tally& t, const Graph& g) {
    auto ref = oracle_enumerate(g, 3);
    for (int d = 1; d <= 3; ++d) {
        auto r = dcut_bipartite_rad2(g, d);
        t.require(r.yes == ref.has_dcut[d - 1]);
        if (r.yes) t.require(tu::ref_valid(g, *r.colouring, d));
    }
    auto mm = maxmc_bipartite_rad2(g);
    t.require(mm.yes == ref.has_mc);
    if (mm.yes) {
        t.require(*mm.value == ref.max_mc);
        t.require(tu::ref_valid(g, *mm.colouring, 1));
    }
    auto md = maxdpm_bipartite_rad2(g);
    t.require(md.yes == ref.has_dpm);
    if (md.yes) {
        t.require(*md.value == ref.max_dpm);
        t.require(tu::ref_extendable(g, *md.colouring));
    }
}

NaeSatInstance random_nae(std::mt19937_64& rng) {
    NaeSatInstance inst;
    inst.vars = 3 + static_cast<int>(rng() % 2);
    int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> vars(inst.vars);
    std::iota(vars.begin(), vars.end(), 1);
    for (int j = 0; j < m; ++j) {
        int size = 2 + static_cast<int>(rng() % 2);
        std::shuffle(vars.begin(), vars.end(), rng);
        inst.clauses.emplace_back(vars.begin(), vars.begin() + size);
    }
    return inst;
}

X3cInstance random_x3c(std::mt19937_64& rng) {
    X3cInstance inst;
    int q = 1 + static_cast<int>(rng() % 2);
    inst.universe_size = 3 * q;
    int k = 2 + static_cast<int>(rng() % 5);
    std::vector<int> elems(inst.universe_size);
    std::iota(elems.begin(), elems.end(), 1);
    for (int j = 0; j < k; ++j) {
        std::shuffle(elems.begin(), elems.end(), rng);
        inst.sets.emplace_back(elems.begin(), elems.begin() + 3);
    }
    return inst;
}

}  // namespace

TEST_CASE("criterion 1: diameter-3 solvers match exhaustive enumeration") {
    Timer timer;
    Tally t;
    try {
        int exhaustive = 0;
        for (int n = 2; n <= 7; ++n)
            tu::for_each_graph(n, [&](const Graph& g) {
                auto rep = structural_report(g);
                if (!rep.connected || !rep.bipartition || rep.diameter > 3) return;
                ++exhaustive;
                compare_diam3(t, g);
            });
        t.require(exhaustive >= 5000);

        std::mt19937_64 rng(101);
        int accepted = 0;
        for (long draws = 0; accepted < 1000 && draws < 200000; ++draws) {
            int n = 8 + static_cast<int>(rng() % 3);
            Graph g = tu::random_connected_bipartite(rng, n, 55);
            if (structural_report(g).diameter > 3) continue;
            ++accepted;
            compare_diam3(t, g);
        }
        t.require(accepted >= 1000);
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(1, t, timer, 300.0);
}

TEST_CASE("criterion 2: radius-2 solvers match exhaustive enumeration") {
    Timer timer;
    Tally t;
    try {
        int exhaustive = 0;
        for (int n = 2; n <= 7; ++n)
            tu::for_each_graph(n, [&](const Graph& g) {
                auto rep = structural_report(g);
                if (!rep.connected || !rep.bipartition || rep.radius > 2) return;
                ++exhaustive;
                compare_rad2(t, g);
            });
        t.require(exhaustive >= 1000);

        std::mt19937_64 rng(202);
        int accepted = 0;
        for (long draws = 0; accepted < 1000 && draws < 200000; ++draws) {
            int n = 8 + static_cast<int>(rng() % 3);
            Graph g = tu::random_connected_bipartite(rng, n, 75);
            if (structural_report(g).radius > 2) continue;
            ++accepted;
            compare_rad2(t, g);
        }
        t.require(accepted >= 1000);
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(2, t, timer, 300.0);
}

TEST_CASE("criterion 3: the cube graph") {
    Timer timer;
    Tally t;
    try {
        auto r = pmc_bipartite_diam3(tu::cube());
        t.require(r.yes);
        t.require(r.value.has_value() && *r.value == 4);
        t.require(r.colouring.has_value() &&
                  tu::ref_perfect(tu::cube(), *r.colouring));
        t.require(oracle_enumerate(tu::cube()).perfect_count == 3);
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(3, t, timer, 1.0);
}

TEST_CASE("criterion 4: the worked cover construction") {
    Timer timer;
    Tally t;
    try {
        X3cInstance fig{6, {{1, 2, 4}, {2, 4, 5}, {3, 5, 6}}};
        auto lg = reduce_x3c_to_maxmc(fig);
        t.require(lg.graph.vertex_count() == 30);
        t.require(lg.threshold == 12);
        auto rep = structural_report(lg.graph);
        t.require(rep.connected);
        t.require(rep.bipartition.has_value());
        t.require(rep.radius == 3);
        t.require(rep.diameter == 4);

        auto oracle = oracle_enumerate_blocks(lg.graph, blocks_from_labels(lg), 1);
        t.require(oracle.max_mc == 12);

        auto cover = x3c_brute_force(fig);
        t.require(cover.has_value() && *cover == std::vector<int>{0, 2});
        auto c = assignment_colouring(fig, *cover, lg);
        t.require(tu::ref_valid(lg.graph, c, 1));
        t.require(tu::ref_value(lg.graph, c) == 12);
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(4, t, timer, 10.0);
}

TEST_CASE("criterion 5: constructions decided against brute force") {
    Timer timer;
    Tally t;
    try {
        std::mt19937_64 rng(505);

        for (int it = 0; it < 50; ++it) {
            NaeSatInstance inst = random_nae(rng);
            auto lg = reduce_nae_to_dcut(inst, 2);
            auto rep = oracle_enumerate_blocks(lg.graph, blocks_from_labels(lg), 2);
            auto sat = nae_brute_force(inst);
            t.require(rep.has_dcut[1] == sat.has_value());
            if (sat) {
                t.require(nae_check(inst, *sat));
                auto c = assignment_colouring(inst, *sat, lg);
                t.require(is_valid_d_colouring(lg.graph, c, 2));
            }
        }

        for (int it = 0; it < 20; ++it) {
            X3cInstance inst = random_x3c(rng);
            auto lg = reduce_x3c_to_maxmc(inst);
            auto rep = oracle_enumerate_blocks(lg.graph, blocks_from_labels(lg), 1);
            auto cover = x3c_brute_force(inst);
            t.require(rep.max_mc <= lg.threshold);
            if (cover) {
                t.require(rep.max_mc == lg.threshold);
                auto c = assignment_colouring(inst, *cover, lg);
                t.require(tu::ref_value(lg.graph, c) == lg.threshold);
            } else {
                t.require(rep.max_mc < lg.threshold);
            }
        }

        const std::vector<std::vector<int>> orders = {
            {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};
        for (const auto& clause : orders) {
            NaeSatInstance inst{3, {clause}};
            auto lg = reduce_nae_to_pmc(inst);
            auto r = oracle_search(lg.graph, Problem::PerfectMatchingCut, 1, 240.0);
            t.require(r.yes == nae_brute_force(inst).has_value());
            t.require(r.yes);  // a lone clause is always satisfiable
            t.require(r.colouring.has_value() &&
                      tu::ref_perfect(lg.graph, *r.colouring));
        }
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(5, t, timer, 600.0);
}

TEST_CASE("criterion 6: generated graphs live in the promised class") {
    Timer timer;
    Tally t;
    try {
        std::mt19937_64 rng(606);
        std::vector<LabelledGraph> all;
        for (int it = 0; it < 8; ++it)
            all.push_back(reduce_nae_to_dcut(random_nae(rng), 2 + static_cast<int>(rng() % 2)));
        for (int it = 0; it < 8; ++it)
            all.push_back(reduce_x3c_to_maxmc(random_x3c(rng)));
        all.push_back(reduce_nae_to_pmc(NaeSatInstance{3, {{1, 2, 3}}}));
        all.push_back(reduce_nae_to_pmc(NaeSatInstance{4, {{1, 2, 3}, {2, 3, 4}}}));

        for (const auto& lg : all) {
            auto rep = structural_report(lg.graph);
            t.require(rep.connected);
            t.require(rep.bipartition.has_value());
            t.require(rep.radius == lg.radius);
            if (lg.family == "nae-pmc") {
                t.require(lg.radius == 4);
            } else {
                t.require(lg.radius == 3);
                t.require(rep.diameter == 4);
                t.require(rep.diameter == lg.diameter);
            }

            auto blocks = blocks_from_labels(lg);
            std::vector<int> owner(lg.graph.vertex_count(), -1);
            bool partition = true;
            for (std::size_t b = 0; b < blocks.size(); ++b)
                for (int v : blocks[b]) {
                    if (v < 0 || v >= lg.graph.vertex_count() || owner[v] != -1)
                        partition = false;
                    else
                        owner[v] = static_cast<int>(b);
                }
            partition &= std::count(owner.begin(), owner.end(), -1) == 0;
            t.require(partition);
        }
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(6, t, timer, 60.0);
}

TEST_CASE("criterion 7: propagation is sound on random precoloured pairs") {
    Timer timer;
    Tally t;
    try {
        std::mt19937_64 rng(707);
        int pairs = 0;
        while (pairs < 10000) {
            int n = 3 + static_cast<int>(rng() % 6);
            Graph g = tu::random_graph(rng, n, 30 + static_cast<int>(rng() % 50));
            if (!structural_report(g).connected) continue;
            int s = 1 + static_cast<int>(rng() % 2);
            int b = 1 + static_cast<int>(rng() % 2);
            if (s + b > n) continue;
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<int> red(order.begin(), order.begin() + s);
            std::vector<int> blue(order.begin() + s, order.begin() + s + b);
            int d = 1 + static_cast<int>(rng() % 2);
            ++pairs;

            auto pc = PartialColouring::from_sets(n, red, blue);
            auto respects = [&](const Colouring& c) {
                for (int v : red)
                    if (c[v] != Colour::Red) return false;
                for (int v : blue)
                    if (c[v] != Colour::Blue) return false;
                return true;
            };

            auto fx = apply_rules_r1_r2(g, pc, d);
            auto fx4 = apply_rules_r1_r4(g, pc);
            bool any_valid = false, any_perfect = false;
            bool forced_agree = true, forced4_agree = true;
            tu::for_each_colouring(n, [&](const Colouring& c) {
                if (!respects(c)) return;
                if (tu::ref_valid(g, c, d)) {
                    any_valid = true;
                    if (fx)
                        for (int v = 0; v < n; ++v)
                            if (fx->is_coloured(v) &&
                                fx->is_red(v) != (c[v] == Colour::Red))
                                forced_agree = false;
                }
                if (tu::ref_perfect(g, c)) {
                    any_perfect = true;
                    if (fx4)
                        for (int v = 0; v < n; ++v)
                            if (fx4->is_coloured(v) &&
                                fx4->is_red(v) != (c[v] == Colour::Red))
                                forced4_agree = false;
                }
            });
            if (!fx) t.require(!any_valid);
            t.require(forced_agree);
            if (!fx4) t.require(!any_perfect);
            t.require(forced4_agree);
        }
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(7, t, timer, 300.0);
}

TEST_CASE("criterion 8: cut certificates round-trip and respect the swap") {
    Timer timer;
    Tally t;
    try {
        std::mt19937_64 rng(808);
        int processed = 0;
        while (processed < 10000) {
            int n = 4 + static_cast<int>(rng() % 7);
            Graph g = tu::random_graph(rng, n, 25 + static_cast<int>(rng() % 40));
            tu::for_each_colouring(n, [&](const Colouring& c) {
                if (processed >= 10000) return;
                if (!tu::ref_valid(g, c, 1)) return;
                ++processed;

                auto cert = cut_from_colouring(g, c);
                std::vector<std::pair<int, int>> expect_cut;
                std::vector<int> expect_a, expect_b;
                for (auto [u, v] : g.edges())
                    if (c[u] != c[v]) expect_cut.emplace_back(u, v);
                for (int v = 0; v < n; ++v)
                    (c[v] == Colour::Red ? expect_a : expect_b).push_back(v);
                t.require(cert.cut == expect_cut);
                t.require(cert.side_a == expect_a);
                t.require(cert.side_b == expect_b);
                t.require(colouring_from_cut(g, cert) == c);

                Colouring sw(c);
                for (auto& x : sw) x = opposite(x);
                t.require(tu::ref_valid(g, sw, 1));
                t.require(tu::ref_value(g, sw) == tu::ref_value(g, c));
                auto cert2 = cut_from_colouring(g, sw);
                t.require(cert2.cut == cert.cut);
                t.require(cert2.side_a == cert.side_b);
                t.require(cert2.side_b == cert.side_a);

                if (tu::ref_perfect(g, c))
                    t.require(2 * tu::ref_value(g, c) == n);
            });
        }
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(8, t, timer, 60.0);
}

TEST_CASE("criterion 9: extendability agrees with perfect-matching enumeration") {
    Timer timer;
    Tally t;
    try {
        std::vector<Graph> corpus = {tu::path(4),
                                     tu::path(5),
                                     tu::path(8),
                                     tu::path(10),
                                     tu::cycle(4),
                                     tu::cycle(6),
                                     tu::cycle(8),
                                     tu::cycle(10),
                                     tu::cube(),
                                     tu::star(5),
                                     tu::star(6),
                                     tu::complete_bipartite(2, 2),
                                     tu::complete_bipartite(2, 3),
                                     tu::complete_bipartite(3, 3),
                                     tu::complete_bipartite(4, 4),
                                     tu::complete_bipartite(5, 5)};
        std::mt19937_64 rng(909);
        for (int it = 0; it < 60; ++it)
            corpus.push_back(tu::random_connected_bipartite(
                rng, 4 + static_cast<int>(rng() % 7), 40));

        long checked = 0;
        for (const Graph& g : corpus) {
            const int n = g.vertex_count();
            tu::for_each_colouring(n, [&](const Colouring& c) {
                if (!tu::ref_valid(g, c, 1)) return;
                ++checked;
                std::vector<std::pair<int, int>> cut;
                for (auto [u, v] : g.edges())
                    if (c[u] != c[v]) cut.emplace_back(u, v);
                bool direct = tu::for_each_perfect_matching(g, [&](const auto& m) {
                    for (auto e : cut)
                        if (std::find(m.begin(), m.end(), e) == m.end()) return false;
                    return true;  // found a perfect matching containing the cut
                });
                t.require(is_perfect_extendable(g, c) == direct);
            });
        }
        t.require(checked >= 1000);
    } catch (const std::exception& e) {
        t.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    announce(9, t, timer, 120.0);
}
