#include "mcut/reductions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "mcut/errors.hpp"

namespace mcut {

namespace {

std::string num(int x) { return std::to_string(x); }

// "C_{j_t}^a" style double subscript.
std::string sub2(const std::string& head, int j, int t, const std::string& tail) {
    return head + "_{" + num(j) + "_" + num(t) + "}" + tail;
}

// Incremental vertex factory: one label per id, checked injective at the end.
struct Builder {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    int add(std::string label) {
        labels.push_back(std::move(label));
        return static_cast<int>(labels.size()) - 1;
    }
    void join(int u, int v) { edges.emplace_back(u, v); }
    void join_all(const std::vector<int>& side_a, const std::vector<int>& side_b) {
        for (int u : side_a)
            for (int v : side_b) join(u, v);
    }
};

// Verifies the promises a construction makes about its own output. A failure
// here is a bug in the construction, not bad input.
LabelledGraph seal(Builder b, std::string family, int radius, int diameter, int d,
                   int threshold) {
    LabelledGraph lg;
    lg.graph = Graph(static_cast<int>(b.labels.size()), b.edges);
    lg.labels = std::move(b.labels);
    lg.family = std::move(family);
    lg.radius = radius;
    lg.diameter = diameter;
    lg.d = d;
    lg.threshold = threshold;

    std::set<std::string> seen(lg.labels.begin(), lg.labels.end());
    if (seen.size() != lg.labels.size())
        throw std::logic_error("generated labels are not injective");
    StructuralReport rep = structural_report(lg.graph);
    if (!rep.connected) throw std::logic_error("generated graph is disconnected");
    if (!rep.bipartition) throw std::logic_error("generated graph is not bipartite");
    if (rep.radius != lg.radius)
        throw std::logic_error("generated graph has radius " + num(rep.radius) +
                               ", expected " + num(lg.radius));
    if (lg.diameter != kInfinite && rep.diameter != lg.diameter)
        throw std::logic_error("generated graph has diameter " + num(rep.diameter) +
                               ", expected " + num(lg.diameter));
    return lg;
}

}  // namespace

void validate(const NaeSatInstance& inst) {
    if (inst.vars < 0) throw std::invalid_argument("negative variable count");
    for (const auto& clause : inst.clauses) {
        if (clause.size() != 2 && clause.size() != 3)
            throw std::invalid_argument("clause size must be 2 or 3");
        for (int v : clause)
            if (v < 1 || v > inst.vars)
                throw std::invalid_argument("variable index " + num(v) + " out of range");
        std::vector<int> sorted = clause;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated variable within a clause");
    }
}

void validate(const X3cInstance& inst) {
    if (inst.universe_size < 0 || inst.universe_size % 3 != 0)
        throw std::invalid_argument("universe size must be a non-negative multiple of 3");
    for (const auto& set : inst.sets) {
        if (set.size() != 3) throw std::invalid_argument("every set must have 3 elements");
        for (int e : set)
            if (e < 1 || e > inst.universe_size)
                throw std::invalid_argument("element " + num(e) + " out of range");
        std::vector<int> sorted = set;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] == sorted[1] || sorted[1] == sorted[2])
            throw std::invalid_argument("repeated element within a set");
    }
}

namespace {

bool nae_holds(const NaeSatInstance& inst, const std::vector<bool>& assignment) {
    for (const auto& clause : inst.clauses) {
        bool any_true = false, any_false = false;
        for (int v : clause) (assignment[v - 1] ? any_true : any_false) = true;
        if (!any_true || !any_false) return false;
    }
    return true;
}

}  // namespace

bool nae_check(const NaeSatInstance& inst, const std::vector<bool>& assignment) {
    validate(inst);
    if (static_cast<int>(assignment.size()) != inst.vars)
        throw std::invalid_argument("assignment length does not match variable count");
    return nae_holds(inst, assignment);
}

std::optional<std::vector<bool>> nae_brute_force(const NaeSatInstance& inst) {
    validate(inst);
    if (inst.vars > 24)
        throw BudgetExceededError("brute force is limited to 24 variables, got " +
                                  num(inst.vars));
    // Ascending masks with variable 1 on the top bit enumerate assignments in
    // lexicographic order, false before true.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << inst.vars); ++mask) {
        std::vector<bool> assignment(inst.vars);
        for (int i = 0; i < inst.vars; ++i)
            assignment[i] = ((mask >> (inst.vars - 1 - i)) & 1) != 0;
        if (nae_holds(inst, assignment)) return assignment;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> x3c_brute_force(const X3cInstance& inst) {
    validate(inst);
    const int k = static_cast<int>(inst.sets.size());
    if (k > 24)
        throw BudgetExceededError("brute force is limited to 24 sets, got " + num(k));
    // Include-first depth-first search returns the lexicographically first
    // exact cover (as a sorted index list).
    std::vector<char> covered(inst.universe_size, 0);
    std::vector<int> chosen;
    int remaining = inst.universe_size;

    auto rec = [&](auto&& self, int next) -> bool {
        if (remaining == 0) return true;
        if (next == k) return false;
        const auto& set = inst.sets[next];
        bool disjoint = true;
        for (int e : set) disjoint = disjoint && !covered[e - 1];
        if (disjoint) {
            for (int e : set) covered[e - 1] = 1;
            remaining -= 3;
            chosen.push_back(next);
            if (self(self, next + 1)) return true;
            chosen.pop_back();
            remaining += 3;
            for (int e : set) covered[e - 1] = 0;
        }
        return self(self, next + 1);
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
}

namespace {

// ---------------------------------------------------------------------------
// Perfect matching cut

void require_pmc_shape(const NaeSatInstance& inst) {
    validate(inst);
    if (inst.clauses.empty()) throw std::invalid_argument("need at least one clause");
    std::vector<char> used(inst.vars, 0);
    for (const auto& clause : inst.clauses) {
        if (clause.size() != 3)
            throw std::invalid_argument("every clause must have 3 literals");
        for (int v : clause) used[v - 1] = 1;
    }
    for (int i = 0; i < inst.vars; ++i)
        if (!used[i])
            throw std::invalid_argument("variable " + num(i + 1) + " occurs in no clause");
}

struct PmcIds {
    // Per clause: clause vertices k[0..2], auxiliary a, internals c[0..3]
    // where c[t] is the cube antipode of k[t] (t >= 1) and c[0] of a.
    struct Cube {
        int k[3], a, c[4];
    };
    std::vector<Cube> cube;           // per clause
    std::vector<int> x, xp;           // per variable: x_i and dummy x_i'
    std::vector<int> b1, b2;          // per clause
    int u = -1, up = -1;
    std::vector<std::array<int, 4>> occ_w;     // per (clause, position), row-major
    std::vector<std::array<int, 4>> clause_w;  // per clause
};

// Four fresh vertices inverting the colour between a and c along the existing
// path a-b-c; the sink w4 hangs off the centre hub.
std::array<int, 4> add_connector(Builder& b, const std::string& tag, int va, int vc,
                                 int hub) {
    std::array<int, 4> w{};
    for (int p = 0; p < 4; ++p) w[p] = b.add("w_{" + tag + "}^" + num(p + 1));
    b.join(va, w[0]);
    b.join(w[0], w[1]);
    b.join(w[1], w[2]);
    b.join(w[2], vc);
    b.join(w[0], w[3]);
    b.join(w[2], w[3]);
    b.join(w[3], hub);
    return w;
}

PmcIds build_pmc(const NaeSatInstance& inst, Builder& b) {
    const int m = static_cast<int>(inst.clauses.size());
    PmcIds ids;
    ids.cube.resize(m);
    for (int j = 0; j < m; ++j) {
        auto& cube = ids.cube[j];
        for (int t = 0; t < 3; ++t) cube.k[t] = b.add("k_" + num(j + 1) + "^" + num(t + 1));
        cube.a = b.add("a_" + num(j + 1));
        for (int t = 0; t < 4; ++t) cube.c[t] = b.add("c_" + num(j + 1) + "^" + num(t));
        // K_{4,4} minus the antipode matching k[t]-c[t+1], a-c[0].
        for (int t = 0; t < 3; ++t)
            for (int s = 0; s < 4; ++s)
                if (s != t + 1) b.join(cube.k[t], cube.c[s]);
        for (int s = 1; s < 4; ++s) b.join(cube.a, cube.c[s]);
    }
    for (int i = 0; i < inst.vars; ++i) {
        ids.x.push_back(b.add("x_" + num(i + 1)));
        ids.xp.push_back(b.add("x_" + num(i + 1) + "'"));
        b.join(ids.x[i], ids.xp[i]);
    }
    for (int j = 0; j < m; ++j) {
        ids.b1.push_back(b.add("b_" + num(j + 1) + "^1"));
        ids.b2.push_back(b.add("b_" + num(j + 1) + "^2"));
        b.join(ids.cube[j].a, ids.b1[j]);
        b.join(ids.b1[j], ids.b2[j]);
    }
    ids.u = b.add("u");
    ids.up = b.add("u'");
    b.join(ids.u, ids.up);

    for (int j = 0; j < m; ++j)
        for (int t = 0; t < 3; ++t) {
            int i = inst.clauses[j][t] - 1;
            b.join(ids.x[i], ids.cube[j].k[t]);
            ids.occ_w.push_back(add_connector(b, num(j + 1) + "_" + num(t + 1),
                                              ids.cube[j].k[t], ids.xp[i], ids.u));
        }
    for (int j = 0; j < m; ++j)
        ids.clause_w.push_back(
            add_connector(b, num(j + 1) + "_b", ids.b2[j], ids.cube[j].a, ids.u));
    return ids;
}

// ---------------------------------------------------------------------------
// d-cut

struct DcutShape {
    std::vector<int> slots_per_clause_lead;   // slots taken by the first literal
    std::vector<int> aux;                     // per variable: 3d - used slots
};

DcutShape require_dcut_shape(const NaeSatInstance& inst, int d) {
    validate(inst);
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (inst.clauses.size() < 2) throw std::invalid_argument("need at least two clauses");
    std::vector<int> occurrences(inst.vars, 0);
    for (const auto& clause : inst.clauses)
        for (int v : clause) ++occurrences[v - 1];
    for (int i = 0; i < inst.vars; ++i)
        if (occurrences[i] > 3)
            throw std::invalid_argument("variable " + num(i + 1) +
                                        " occurs in more than three clauses");

    DcutShape shape;
    std::vector<int> used(inst.vars, 0);
    for (const auto& clause : inst.clauses) {
        int lead = clause.size() == 3 ? d - 1 : d;
        shape.slots_per_clause_lead.push_back(lead);
        for (std::size_t t = 0; t < clause.size(); ++t)
            used[clause[t] - 1] += (t == 0 ? lead : 1);
    }
    for (int i = 0; i < inst.vars; ++i) {
        if (used[i] > 3 * d)
            throw std::invalid_argument("variable " + num(i + 1) +
                                        " exhausts its gadget slots");
        shape.aux.push_back(3 * d - used[i]);
    }
    return shape;
}

struct DcutIds {
    // Biclique members, per copy (0 = K, 1 = K') and side (0 = a, 1 = b).
    std::vector<int> clause_v[2][2];  // d per clause, clause-major
    std::vector<int> anchor[2][2];    // anchors serving the opposite-letter gadgets
    int hub[2][2];                    // u_a, u_b, u'_a, u'_b
    std::vector<std::vector<int>> slot[2];  // per variable, occupied gadget slots
    std::vector<std::vector<int>> aux[2];   // per variable, auxiliary gadget slots
};

DcutIds build_dcut(const NaeSatInstance& inst, int d, const DcutShape& shape, Builder& b) {
    const int m = static_cast<int>(inst.clauses.size());
    const int n = inst.vars;
    DcutIds ids;

    const char* side_name[2] = {"a", "b"};
    for (int copy = 0; copy < 2; ++copy) {
        std::string k_tag = copy == 0 ? "K" : "K'";
        std::string c_tag = copy == 0 ? "C" : "C'";
        std::string anchor_tag = copy == 0 ? "anchor" : "anchor'";
        for (int side = 0; side < 2; ++side) {
            std::string prefix = k_tag + "_" + side_name[side] + ":";
            std::string sup = std::string("^") + side_name[side];
            for (int j = 1; j <= m; ++j)
                for (int t = 1; t <= d; ++t)
                    ids.clause_v[copy][side].push_back(b.add(prefix + sub2(c_tag, j, t, sup)));
            // Anchors in side a pin auxiliaries of the b-side gadgets.
            std::string served = std::string("^") + side_name[1 - side];
            for (int i = 1; i <= n; ++i)
                for (int t = 1; t <= shape.aux[i - 1]; ++t)
                    ids.anchor[copy][side].push_back(
                        b.add(prefix + sub2(anchor_tag, i, t, served)));
            std::string hub = copy == 0 ? "u" : "u'";
            ids.hub[copy][side] =
                b.add(prefix + hub + "_" + side_name[side]);
        }
    }
    for (int side = 0; side < 2; ++side) {
        ids.slot[side].resize(n);
        ids.aux[side].resize(n);
    }
    for (int j = 0; j < m; ++j) {
        const auto& clause = inst.clauses[j];
        for (std::size_t t = 0; t < clause.size(); ++t) {
            int i = clause[t] - 1;
            int width = t == 0 ? shape.slots_per_clause_lead[j] : 1;
            for (int s = 1; s <= width; ++s) {
                for (int side = 0; side < 2; ++side)
                    ids.slot[side][i].push_back(
                        b.add("X_" + num(i + 1) + "^" + side_name[side] + ":" +
                              sub2("occ", j + 1, s, "")));
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int t = 1; t <= shape.aux[i]; ++t)
            for (int side = 0; side < 2; ++side)
                ids.aux[side][i].push_back(
                    b.add("X_" + num(i + 1) + "^" + side_name[side] + ":aux_" + num(t)));

    // Bicliques: the full a-side against the full b-side, per copy.
    for (int copy = 0; copy < 2; ++copy) {
        std::vector<int> side[2];
        for (int s = 0; s < 2; ++s) {
            side[s] = ids.clause_v[copy][s];
            side[s].insert(side[s].end(), ids.anchor[copy][s].begin(),
                           ids.anchor[copy][s].end());
            side[s].push_back(ids.hub[copy][s]);
        }
        b.join_all(side[0], side[1]);
    }
    // Variable gadgets K_{3d,3d}.
    for (int i = 0; i < n; ++i) {
        std::vector<int> side[2];
        for (int s = 0; s < 2; ++s) {
            side[s] = ids.slot[s][i];
            side[s].insert(side[s].end(), ids.aux[s][i].begin(), ids.aux[s][i].end());
        }
        b.join_all(side[0], side[1]);
    }
    // Occupied slots against the clause vertices of both copies, opposite side.
    {
        std::vector<std::size_t> cursor(n, 0);
        for (int j = 0; j < m; ++j) {
            const auto& clause = inst.clauses[j];
            for (std::size_t t = 0; t < clause.size(); ++t) {
                int i = clause[t] - 1;
                int width = t == 0 ? shape.slots_per_clause_lead[j] : 1;
                for (int s = 0; s < width; ++s) {
                    for (int side = 0; side < 2; ++side) {
                        int v = ids.slot[side][i][cursor[i] + s];
                        for (int copy = 0; copy < 2; ++copy)
                            for (int t2 = 0; t2 < d; ++t2)
                                b.join(v, ids.clause_v[copy][1 - side][j * d + t2]);
                    }
                }
                cursor[i] += width;
            }
        }
    }
    // Anchor pendant edges: auxiliary t of X_i^a meets anchor_{i_t}^a in K_b
    // and anchor'_{i_t}^a in K'_b, and symmetrically.
    {
        std::vector<int> base(n, 0);
        int acc = 0;
        for (int i = 0; i < n; ++i) {
            base[i] = acc;
            acc += shape.aux[i];
        }
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < shape.aux[i]; ++t)
                for (int side = 0; side < 2; ++side)
                    for (int copy = 0; copy < 2; ++copy)
                        b.join(ids.aux[side][i][t], ids.anchor[copy][1 - side][base[i] + t]);
    }
    b.join(ids.hub[0][0], ids.hub[1][1]);  // u_a u'_b
    b.join(ids.hub[0][1], ids.hub[1][0]);  // u_b u'_a
    return ids;
}

// ---------------------------------------------------------------------------
// Exact 3-cover

void require_x3c_shape(const X3cInstance& inst) {
    validate(inst);
    if (inst.universe_size == 0) throw std::invalid_argument("empty universe");
    if (inst.sets.size() < 2)
        throw std::invalid_argument("need at least two sets for the claimed structure");
}

// Layout: x_1..x_3q, y_1..y_3q, then 6 vertices per set (top class first).
void build_x3c(const X3cInstance& inst, Builder& b) {
    const int q3 = inst.universe_size;
    std::vector<int> xs, ys;
    for (int e = 1; e <= q3; ++e) xs.push_back(b.add("K_X:x_" + num(e)));
    for (int e = 1; e <= q3; ++e) ys.push_back(b.add("K_X:y_" + num(e)));
    b.join_all(xs, ys);
    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
        std::vector<int> elems = inst.sets[j];
        std::sort(elems.begin(), elems.end());
        std::vector<int> top, bottom;
        for (int e : elems)
            top.push_back(b.add("K_S" + num(static_cast<int>(j) + 1) + "^1:x_" + num(e)));
        for (int e : elems)
            bottom.push_back(b.add("K_S" + num(static_cast<int>(j) + 1) + "^2:x_" + num(e)));
        b.join_all(top, bottom);
        for (int t = 0; t < 3; ++t) {
            b.join(top[t], xs[elems[t] - 1]);
            b.join(bottom[t], ys[elems[t] - 1]);
        }
    }
}

Colouring finish(std::vector<int> colour_of) {
    Colouring c;
    c.reserve(colour_of.size());
    for (int v : colour_of) {
        if (v < 0) throw std::logic_error("witness colouring left a vertex unset");
        c.push_back(v == 0 ? Colour::Red : Colour::Blue);
    }
    return c;
}

}  // namespace

LabelledGraph reduce_nae_to_pmc(const NaeSatInstance& inst) {
    require_pmc_shape(inst);
    Builder b;
    build_pmc(inst, b);
    return seal(std::move(b), "nae-pmc", 4, kInfinite, -1, -1);
}

LabelledGraph reduce_nae_to_dcut(const NaeSatInstance& inst, int d) {
    DcutShape shape = require_dcut_shape(inst, d);
    Builder b;
    build_dcut(inst, d, shape, b);
    return seal(std::move(b), "nae-dcut", 3, 4, d, -1);
}

LabelledGraph reduce_x3c_to_maxmc(const X3cInstance& inst) {
    require_x3c_shape(inst);
    Builder b;
    build_x3c(inst, b);
    return seal(std::move(b), "x3c-maxmc", 3, 4, -1, 2 * inst.universe_size);
}

Colouring assignment_colouring(const NaeSatInstance& inst,
                               const std::vector<bool>& assignment,
                               const LabelledGraph& lg) {
    if (!nae_check(inst, assignment))
        throw std::invalid_argument("assignment is not NAE-satisfying");
    const int kRed = 0, kBlue = 1;
    auto of = [&](int variable_1based) {
        return assignment[variable_1based - 1] ? kBlue : kRed;
    };
    auto flip = [](int c) { return 1 - c; };

    if (lg.family == "nae-pmc") {
        require_pmc_shape(inst);
        Builder b;
        PmcIds ids = build_pmc(inst, b);
        if (b.labels != lg.labels)
            throw std::invalid_argument("graph was not generated from this instance");
        std::vector<int> col(lg.graph.vertex_count(), -1);
        // True variables are blue; clause vertices copy their variable; the
        // auxiliary takes the minority colour of its clause vertices and the
        // cube is completed by antipode inversion. The b-path repeats a_j then
        // inverts; the centre is blue with its dummy as partner. Connector
        // interiors are forced: the ends copy their attachment, the sink is
        // blue, its mate red.
        col[ids.u] = kBlue;
        col[ids.up] = kRed;
        for (int i = 1; i <= inst.vars; ++i) {
            col[ids.x[i - 1]] = of(i);
            col[ids.xp[i - 1]] = flip(of(i));
        }
        const int m = static_cast<int>(inst.clauses.size());
        int occ = 0;
        for (int j = 0; j < m; ++j) {
            const auto& clause = inst.clauses[j];
            int blues = 0;
            for (int t = 0; t < 3; ++t) {
                col[ids.cube[j].k[t]] = of(clause[t]);
                blues += of(clause[t]);
            }
            int minority = blues == 1 ? kBlue : kRed;
            col[ids.cube[j].a] = minority;
            col[ids.cube[j].c[0]] = flip(minority);
            for (int t = 0; t < 3; ++t) col[ids.cube[j].c[t + 1]] = flip(of(clause[t]));
            col[ids.b1[j]] = minority;
            col[ids.b2[j]] = flip(minority);
            for (int t = 0; t < 3; ++t, ++occ) {
                const auto& w = ids.occ_w[occ];
                col[w[0]] = of(clause[t]);
                col[w[1]] = kRed;
                col[w[2]] = flip(of(clause[t]));
                col[w[3]] = kBlue;
            }
            const auto& w = ids.clause_w[j];
            col[w[0]] = flip(minority);
            col[w[1]] = kRed;
            col[w[2]] = minority;
            col[w[3]] = kBlue;
        }
        return finish(std::move(col));
    }
    if (lg.family == "nae-dcut") {
        DcutShape shape = require_dcut_shape(inst, lg.d);
        Builder b;
        DcutIds ids = build_dcut(inst, lg.d, shape, b);
        if (b.labels != lg.labels)
            throw std::invalid_argument("graph was not generated from this instance");
        std::vector<int> col(lg.graph.vertex_count(), -1);
        // True variable gadgets and all of K are red; K' is blue.
        for (int side = 0; side < 2; ++side) {
            for (int copy = 0; copy < 2; ++copy) {
                int c = copy == 0 ? kRed : kBlue;
                for (int v : ids.clause_v[copy][side]) col[v] = c;
                for (int v : ids.anchor[copy][side]) col[v] = c;
                col[ids.hub[copy][side]] = c;
            }
            for (int i = 1; i <= inst.vars; ++i) {
                int c = assignment[i - 1] ? kRed : kBlue;
                for (int v : ids.slot[side][i - 1]) col[v] = c;
                for (int v : ids.aux[side][i - 1]) col[v] = c;
            }
        }
        return finish(std::move(col));
    }
    throw std::invalid_argument("unknown family: " + lg.family);
}

Colouring assignment_colouring(const X3cInstance& inst, const std::vector<int>& cover,
                               const LabelledGraph& lg) {
    if (lg.family != "x3c-maxmc")
        throw std::invalid_argument("unknown family: " + lg.family);
    require_x3c_shape(inst);
    std::vector<char> hit(inst.universe_size, 0);
    for (int j : cover) {
        if (j < 0 || j >= static_cast<int>(inst.sets.size()))
            throw std::invalid_argument("cover index out of range");
        for (int e : inst.sets[j]) {
            if (hit[e - 1]) throw std::invalid_argument("cover is not exact");
            hit[e - 1] = 1;
        }
    }
    for (char h : hit)
        if (!h) throw std::invalid_argument("cover is not exact");

    Builder b;
    build_x3c(inst, b);
    if (b.labels != lg.labels)
        throw std::invalid_argument("graph was not generated from this instance");
    std::vector<char> in_cover(inst.sets.size(), 0);
    for (int j : cover) in_cover[j] = 1;
    // K_X red; chosen set gadgets blue, the rest red.
    std::vector<int> col(lg.graph.vertex_count(), 0);
    for (std::size_t j = 0; j < inst.sets.size(); ++j)
        if (in_cover[j])
            for (int t = 0; t < 6; ++t) col[2 * inst.universe_size + 6 * j + t] = 1;
    return finish(std::move(col));
}

std::vector<std::vector<int>> blocks_from_labels(const LabelledGraph& lg) {
    auto key_of = [](const std::string& label) {
        auto colon = label.find(':');
        if (colon == std::string::npos) return label;
        std::string prefix = label.substr(0, colon);
        for (const char* marker : {"_a", "_b", "^a", "^b", "^1", "^2"})
            if (prefix.size() > 2 && prefix.compare(prefix.size() - 2, 2, marker) == 0)
                return prefix.substr(0, prefix.size() - 2);
        return prefix;
    };
    std::map<std::string, std::vector<int>> groups;
    for (std::size_t v = 0; v < lg.labels.size(); ++v)
        groups[key_of(lg.labels[v])].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> blocks;
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

}  // namespace mcut
