#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcut/colouring.hpp"
#include "mcut/graph.hpp"

namespace mcut {

// Not-all-equal satisfiability instance. Variables are 1-based; every literal
// is positive, so a clause is just a list of distinct variable indices.
struct NaeSatInstance {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Exact-3-cover instance. The universe is {1, ..., universe_size} with
// universe_size divisible by 3; every set has exactly three distinct members.
struct X3cInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
};

// Throw std::invalid_argument unless the instance invariants hold.
void validate(const NaeSatInstance& inst);
void validate(const X3cInstance& inst);

// True iff every clause sees both truth values under the assignment
// (assignment[i - 1] is the value of variable i).
bool nae_check(const NaeSatInstance& inst, const std::vector<bool>& assignment);

// Lexicographically first NAE-satisfying assignment (false < true, variable 1
// most significant), or nullopt. Throws BudgetExceededError above 24 variables.
std::optional<std::vector<bool>> nae_brute_force(const NaeSatInstance& inst);

// Lexicographically first exact cover as sorted 0-based indices into
// inst.sets, or nullopt. Throws BudgetExceededError above 24 sets.
std::optional<std::vector<int>> x3c_brute_force(const X3cInstance& inst);

// A generated hard instance: the graph, one role label per vertex, and the
// structure the construction promises. Construction functions verify the
// promise against structural_report before returning (std::logic_error on
// mismatch, which would mean a construction bug).
struct LabelledGraph {
    Graph graph;
    std::vector<std::string> labels;  // injective, one per vertex
    std::string family;               // "nae-pmc", "nae-dcut" or "x3c-maxmc"
    bool bipartite = true;
    int radius = kInfinite;
    int diameter = kInfinite;  // kInfinite when the family claims none
    int d = -1;                // d-cut parameter, -1 elsewhere
    int threshold = -1;        // x3c-maxmc target cut value 6q, -1 elsewhere
};

// Perfect-matching-cut hardness graph for a 3-uniform NAE instance. Per
// clause: a cube (K_{4,4} minus the antipode matching) on clause vertices
// k_j^1..k_j^3, auxiliary a_j and internals c_j^0..c_j^3, plus a pendant path
// a_j - b_j^1 - b_j^2. Per variable: x_i adjacent to its dummy x_i' and to
// k_j^t for every occurrence. A centre u with dummy u'. Each occurrence
// triple (k_j^t, x_i, x_i') and each clause triple (b_j^2, b_j^1, a_j) gets a
// four-vertex connector whose sink vertex is adjacent to u, which pins the
// radius at 4. Requires every clause size 3, at least one clause, and every
// variable in some clause.
LabelledGraph reduce_nae_to_pmc(const NaeSatInstance& inst);

// d-cut hardness graph (d >= 2) for an NAE instance with clause sizes 2 and
// 3, at least two clauses, and every variable in at most three clauses. Two
// bicliques K and K' carry d clause vertices per clause on each side plus a
// hub u_a/u_b (resp. u'_a/u'_b); each variable gets a K_{3d,3d} gadget whose
// slot vertices are joined to the clause vertices of both bicliques (the
// leading literal of a 3-clause takes d-1 slots per side, of a 2-clause d
// slots; every other literal one slot); leftover gadget vertices become
// auxiliaries, each pinned by one fresh anchor vertex in the opposite class
// of K and of K'. Cross edges u_a u'_b and u_b u'_a finish the graph:
// bipartite, radius 3, diameter 4.
LabelledGraph reduce_nae_to_dcut(const NaeSatInstance& inst, int d);

// Maximum-matching-cut hardness graph for an exact-3-cover instance with at
// least two sets: K_{3q,3q} on element vertices x_1..x_3q / y_1..y_3q, one
// K_{3,3} per set, and an attachment edge from each set-gadget vertex to its
// element's x- (top class) or y- (bottom class) vertex. Bipartite, radius 3,
// diameter 4; a cut of value threshold = 6q exists iff a cover does.
LabelledGraph reduce_x3c_to_maxmc(const X3cInstance& inst);

// Witness colouring for a generated graph, built from a satisfying assignment
// (NAE families) or an exact cover (0-based set indices). The result passes
// is_perfect_colouring (nae-pmc), is_valid_d_colouring (nae-dcut) or has
// value 6q (x3c-maxmc). Throws std::invalid_argument if the assignment or
// cover does not actually satisfy the instance, or if lg was not generated
// from inst.
Colouring assignment_colouring(const NaeSatInstance& inst,
                               const std::vector<bool>& assignment,
                               const LabelledGraph& lg);
Colouring assignment_colouring(const X3cInstance& inst,
                               const std::vector<int>& cover,
                               const LabelledGraph& lg);

// Monochromatic groups implied by the labels, for the block oracle: vertices
// sharing a label prefix (before ':') after one trailing class marker of
// _a, _b, ^a, ^b, ^1, ^2 is stripped form one block; unprefixed labels form
// singletons. Blocks are ordered by smallest member id.
std::vector<std::vector<int>> blocks_from_labels(const LabelledGraph& lg);

}  // namespace mcut
