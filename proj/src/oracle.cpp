#include "mcut/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "mcut/errors.hpp"

namespace mcut {

namespace {

// Streams total colourings into an OracleReport, keeping the first witness in
// feed order for every field.
class Classifier {
public:
    Classifier(const Graph& g, int d_max) : g_(g), d_max_(d_max) {
        rep_.has_dcut.assign(d_max, false);
        opp_.resize(g.vertex_count());
    }

    void feed(const Colouring& c) {
        const int n = g_.vertex_count();
        std::fill(opp_.begin(), opp_.end(), 0);
        int value = 0;
        for (auto [u, v] : g_.edges()) {
            if (c[u] != c[v]) {
                ++value;
                ++opp_[u];
                ++opp_[v];
            }
        }
        bool red = false, blue = false;
        int max_opp = 0;
        for (int v = 0; v < n; ++v) {
            (c[v] == Colour::Red ? red : blue) = true;
            max_opp = std::max(max_opp, opp_[v]);
        }
        if (!red || !blue) return;  // every family requires both colours

        for (int d = std::max(1, max_opp); d <= d_max_; ++d) {
            if (!rep_.has_dcut[d - 1]) {
                rep_.has_dcut[d - 1] = true;
                rep_.witnesses.emplace("dcut_" + std::to_string(d), c);
            }
        }
        if (max_opp > 1) return;

        rep_.has_mc = true;
        if (value > rep_.max_mc) {
            rep_.max_mc = value;
            rep_.witnesses["max_mc"] = c;
        }
        if (rep_.min_mc == -1 || value < rep_.min_mc) {
            rep_.min_mc = value;
            rep_.witnesses["min_mc"] = c;
        }
        {
            bool all_one = true;
            for (int v = 0; v < n && all_one; ++v) all_one = opp_[v] == 1;
            if (all_one) {
                ++rep_.perfect_count;
                rep_.has_pmc = true;
                rep_.witnesses.emplace("pmc", c);
            }
        }
        if (is_perfect_extendable(g_, c)) {
            rep_.has_dpm = true;
            if (value > rep_.max_dpm) {
                rep_.max_dpm = value;
                rep_.witnesses["max_dpm"] = c;
            }
        }
    }

    OracleReport take() { return std::move(rep_); }

private:
    const Graph& g_;
    int d_max_;
    OracleReport rep_;
    std::vector<int> opp_;
};

// Checks the wall clock once per 4096 colourings; 0 disables the limit.
class Deadline {
public:
    explicit Deadline(double timeout_seconds) : armed_(timeout_seconds > 0) {
        if (armed_)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_seconds));
    }
    void tick() {
        if (armed_ && (++count_ & 4095) == 0 && std::chrono::steady_clock::now() >= at_)
            throw TimeoutError("enumeration hit the time limit");
    }

private:
    bool armed_;
    std::uint64_t count_ = 0;
    std::chrono::steady_clock::time_point at_;
};

}  // namespace

OracleReport oracle_enumerate(const Graph& g, int d_max, int budget,
                              double timeout_seconds) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const int n = g.vertex_count();
    if (n > budget)
        throw BudgetExceededError("enumerating " + std::to_string(n) +
                                  " vertices exceeds the budget of " + std::to_string(budget));
    Classifier cls(g, d_max);
    if (n >= 2) {
        Deadline deadline(timeout_seconds);
        Colouring c(n, Colour::Red);
        const std::uint64_t total = std::uint64_t{1} << (n - 1);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            deadline.tick();
            for (int v = 1; v < n; ++v)
                c[v] = (mask >> (v - 1)) & 1 ? Colour::Blue : Colour::Red;
            cls.feed(c);
        }
    }
    return cls.take();
}

OracleReport oracle_enumerate_blocks(const Graph& g,
                                     const std::vector<std::vector<int>>& blocks,
                                     int d_max, int budget, double timeout_seconds) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("blocks must be non-empty");
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw std::invalid_argument("block vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("blocks overlap");
            owner[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("blocks do not cover every vertex");

    const int k = static_cast<int>(blocks.size());
    if (k > budget)
        throw BudgetExceededError("enumerating " + std::to_string(k) +
                                  " blocks exceeds the budget of " + std::to_string(budget));
    Classifier cls(g, d_max);
    if (k >= 2) {
        Deadline deadline(timeout_seconds);
        Colouring c(n, Colour::Red);
        const std::uint64_t total = std::uint64_t{1} << (k - 1);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            deadline.tick();
            for (int b = 1; b < k; ++b) {
                Colour col = (mask >> (b - 1)) & 1 ? Colour::Blue : Colour::Red;
                for (int v : blocks[b]) c[v] = col;
            }
            cls.feed(c);
        }
    }
    return cls.take();
}

SolveResult oracle_search(const Graph& g, Problem problem, int d, double timeout_seconds) {
    if (problem != Problem::DCut) d = 1;
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (!structural_report(g).connected)
        throw ClassViolationError("search oracle requires a connected graph");

    const int n = g.vertex_count();
    SolveResult res;
    if (n < 2) return res;  // both colours cannot be used

    const bool perfect = problem == Problem::PerfectMatchingCut;
    const bool maximise = problem == Problem::MaxMatchingCut ||
                          problem == Problem::MaxDisconnectedPerfectMatching;
    const bool extendable = problem == Problem::DisconnectedPerfectMatching ||
                            problem == Problem::MaxDisconnectedPerfectMatching;
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(timeout_seconds));

    std::optional<Colouring> found;  // decision witness
    std::optional<Colouring> best;   // incumbent for the max problems
    int best_value = -1;
    std::vector<int> opp(n);

    auto leaf_ok = [&](const Colouring& c) {
        if (perfect) return is_perfect_colouring(g, c);
        if (!is_valid_d_colouring(g, c, d)) return false;
        return !extendable || is_perfect_extendable(g, c);
    };

    // Returns true once a decision witness is found, cutting the search.
    auto dfs = [&](auto&& self, const PartialColouring& pc0) -> bool {
        if (std::chrono::steady_clock::now() >= deadline)
            throw TimeoutError("search oracle hit the time limit");
        PropagationStats ps;
        auto next = perfect ? apply_rules_r1_r4(g, pc0, &ps)
                            : apply_rules_r1_r2(g, pc0, d, &ps);
        res.stats.rule_applications += ps.rule_applications;
        if (!next) return false;
        const PartialColouring& pc = *next;

        if (maximise && best) {
            // Every future bichromatic edge consumes one unit of capacity at
            // both endpoints: a coloured vertex has 1 minus its current
            // opposite count, an uncoloured vertex has 1.
            std::fill(opp.begin(), opp.end(), 0);
            int base = 0;
            for (auto [u, v] : g.edges())
                if (pc.is_coloured(u) && pc.is_coloured(v) && pc.is_red(u) != pc.is_red(v)) {
                    ++base;
                    ++opp[u];
                    ++opp[v];
                }
            int cap_sum = 0;
            for (int v = 0; v < n; ++v)
                cap_sum += pc.is_coloured(v) ? std::max(0, 1 - opp[v]) : 1;
            if (base + cap_sum / 2 <= best_value) return false;
        }

        if (pc.total()) {
            Colouring c = pc.to_colouring();
            if (!leaf_ok(c)) return false;
            int value = colouring_value(g, c);
            if (maximise) {
                if (value > best_value) {
                    best_value = value;
                    best = std::move(c);
                }
                return false;
            }
            found = std::move(c);
            return true;
        }

        int pick = -1, pick_score = -1;
        for (int v = 0; v < n; ++v) {
            if (pc.is_coloured(v)) continue;
            int score = 0;
            for (int w : g.neighbours(v)) score += pc.is_coloured(w);
            if (score > pick_score) {
                pick = v;
                pick_score = score;
            }
        }
        for (Colour col : {Colour::Red, Colour::Blue}) {
            PartialColouring child = pc;
            child.set(pick, col);
            ++res.stats.branches;
            if (self(self, child)) return true;
        }
        return false;
    };

    if (perfect) {
        // In a perfect colouring vertex 0 has exactly one opposite neighbour;
        // branch over which one it is.
        for (int w : g.neighbours(0)) {
            PartialColouring pc(n);
            pc.set(0, Colour::Red);
            for (int x : g.neighbours(0)) pc.set(x, x == w ? Colour::Blue : Colour::Red);
            ++res.stats.branches;
            if (dfs(dfs, pc)) break;
        }
    } else {
        PartialColouring pc(n);
        pc.set(0, Colour::Red);
        dfs(dfs, pc);
    }

    if (maximise) {
        if (best) {
            res.yes = true;
            res.value = best_value;
            res.colouring = std::move(best);
        }
    } else if (found) {
        res.yes = true;
        res.value = colouring_value(g, *found);
        res.colouring = std::move(found);
    }
    return res;
}

}  // namespace mcut
