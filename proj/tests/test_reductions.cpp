#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcut/errors.hpp"
#include "mcut/oracle.hpp"
#include "mcut/reductions.hpp"
#include "testutil.hpp"

using namespace mcut;
namespace tu = testutil;

namespace {

const NaeSatInstance kOneClause{3, {{1, 2, 3}}};
const NaeSatInstance kChain{3, {{1, 2}, {2, 3}}};
const NaeSatInstance kTriangle{3, {{1, 2}, {2, 3}, {1, 3}}};  // NAE-unsatisfiable
const X3cInstance kFig{6, {{1, 2, 4}, {2, 4, 5}, {3, 5, 6}}};
const X3cInstance kNoCover{6, {{1, 2, 3}, {3, 4, 5}}};

bool has_label(const LabelledGraph& lg, const std::string& s) {
    return std::find(lg.labels.begin(), lg.labels.end(), s) != lg.labels.end();
}

void check_labelled_graph(const LabelledGraph& lg) {
    REQUIRE(static_cast<int>(lg.labels.size()) == lg.graph.vertex_count());
    std::set<std::string> uniq(lg.labels.begin(), lg.labels.end());
    CHECK(uniq.size() == lg.labels.size());

    auto rep = structural_report(lg.graph);
    CHECK(rep.connected);
    CHECK(rep.bipartition.has_value() == lg.bipartite);
    CHECK(rep.radius == lg.radius);
    if (lg.diameter != kInfinite) CHECK(rep.diameter == lg.diameter);

    auto blocks = blocks_from_labels(lg);
    std::vector<int> owner(lg.graph.vertex_count(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) {
            CHECK(owner[v] == -1);
            owner[v] = static_cast<int>(b);
        }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
}

bool constant_on_blocks(const LabelledGraph& lg, const Colouring& c) {
    for (const auto& block : blocks_from_labels(lg))
        for (int v : block)
            if (c[v] != c[block[0]]) return false;
    return true;
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_NOTHROW(validate(kOneClause));
    CHECK_NOTHROW(validate(NaeSatInstance{3, {}}));
    CHECK_THROWS_AS(validate(NaeSatInstance{-1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(NaeSatInstance{3, {{1}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(NaeSatInstance{4, {{1, 2, 3, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(NaeSatInstance{3, {{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(NaeSatInstance{3, {{1, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(NaeSatInstance{3, {{2, 2, 3}}}), std::invalid_argument);

    CHECK_NOTHROW(validate(kFig));
    CHECK_THROWS_AS(validate(X3cInstance{4, {{1, 2, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(X3cInstance{3, {{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(X3cInstance{3, {{0, 1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(X3cInstance{3, {{1, 2, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(X3cInstance{3, {{1, 1, 2}}}), std::invalid_argument);
}

TEST_CASE("not-all-equal checking and brute force") {
    CHECK(nae_check(kOneClause, {false, false, true}));
    CHECK_FALSE(nae_check(kOneClause, {true, true, true}));
    CHECK_THROWS_AS(nae_check(kOneClause, {true, true}), std::invalid_argument);

    auto a = nae_brute_force(kOneClause);
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<bool>{false, false, true});

    a = nae_brute_force(kChain);
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<bool>{false, true, false});

    CHECK_FALSE(nae_brute_force(kTriangle).has_value());

    a = nae_brute_force(NaeSatInstance{2, {}});
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<bool>{false, false});

    NaeSatInstance big{25, {{1, 2}}};
    CHECK_THROWS_AS(nae_brute_force(big), BudgetExceededError);
}

TEST_CASE("exact-3-cover brute force") {
    auto c = x3c_brute_force(kFig);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int>{0, 2});

    c = x3c_brute_force(X3cInstance{3, {{1, 2, 3}}});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int>{0});

    CHECK_FALSE(x3c_brute_force(kNoCover).has_value());

    X3cInstance big{3, std::vector<std::vector<int>>(25, {1, 2, 3})};
    CHECK_THROWS_AS(x3c_brute_force(big), BudgetExceededError);
}

TEST_CASE("perfect-matching-cut construction") {
    auto lg = reduce_nae_to_pmc(kOneClause);
    CHECK(lg.family == "nae-pmc");
    CHECK(lg.graph.vertex_count() == 34);
    CHECK(lg.radius == 4);
    CHECK(lg.diameter == kInfinite);
    CHECK(lg.d == -1);
    CHECK(lg.threshold == -1);
    check_labelled_graph(lg);
    for (const char* s : {"k_1^1", "k_1^3", "a_1", "c_1^0", "c_1^3", "b_1^1",
                          "b_1^2", "x_3", "x_3'", "u", "u'", "w_{1_1}^1", "w_{1_b}^4"})
        CHECK(has_label(lg, s));

    // 26 per clause, 2 per variable, centre pair.
    auto lg2 = reduce_nae_to_pmc(NaeSatInstance{3, {{1, 2, 3}, {1, 2, 3}}});
    CHECK(lg2.graph.vertex_count() == 60);

    CHECK_THROWS_AS(reduce_nae_to_pmc(NaeSatInstance{3, {}}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_nae_to_pmc(kChain), std::invalid_argument);
    CHECK_THROWS_AS(reduce_nae_to_pmc(NaeSatInstance{4, {{1, 2, 3}}}),
                    std::invalid_argument);

    // Deterministic construction.
    auto again = reduce_nae_to_pmc(kOneClause);
    CHECK(again.labels == lg.labels);
    CHECK(again.graph.edges() == lg.graph.edges());
}

TEST_CASE("perfect colouring from a satisfying assignment") {
    auto lg = reduce_nae_to_pmc(kOneClause);
    auto c = assignment_colouring(kOneClause, {false, false, true}, lg);
    CHECK(is_perfect_colouring(lg.graph, c));
    CHECK(tu::ref_perfect(lg.graph, c));
    CHECK(tu::ref_value(lg.graph, c) == 17);  // n/2 bichromatic edges

    CHECK_THROWS_AS(assignment_colouring(kOneClause, {true, true, true}, lg),
                    std::invalid_argument);
    // Satisfying assignment, but for a different instance.
    NaeSatInstance other{4, {{1, 2, 3}, {2, 3, 4}}};
    CHECK_THROWS_AS(assignment_colouring(other, {false, false, true, true}, lg),
                    std::invalid_argument);
}

TEST_CASE("d-cut construction") {
    auto lg = reduce_nae_to_dcut(kChain, 2);
    CHECK(lg.family == "nae-dcut");
    CHECK(lg.radius == 3);
    CHECK(lg.diameter == 4);
    CHECK(lg.d == 2);
    check_labelled_graph(lg);
    CHECK(lg.labels[0] == "K_a:C_{1_1}^a");
    for (const char* s : {"K_a:u_a", "K_b:u_b", "K'_a:u'_a", "K'_b:u'_b",
                          "K_a:anchor_{1_1}^b", "X_1^a:occ_{1_1}", "X_2^a:occ_{1_1}",
                          "X_2^b:occ_{2_1}", "X_1^a:aux_1"})
        CHECK(has_label(lg, s));

    // Blocks: the two bicliques plus one per variable.
    auto blocks = blocks_from_labels(lg);
    CHECK(blocks.size() == static_cast<std::size_t>(kChain.vars) + 2);

    auto c = assignment_colouring(kChain, {false, true, false}, lg);
    CHECK(is_valid_d_colouring(lg.graph, c, 2));
    CHECK(tu::ref_valid(lg.graph, c, 2));
    CHECK(constant_on_blocks(lg, c));

    CHECK_THROWS_AS(reduce_nae_to_dcut(kChain, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_nae_to_dcut(NaeSatInstance{2, {{1, 2}}}, 2),
                    std::invalid_argument);
    NaeSatInstance crowded{2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}};
    CHECK_THROWS_AS(reduce_nae_to_dcut(crowded, 2), std::invalid_argument);

    auto lg3 = reduce_nae_to_dcut(kChain, 3);
    CHECK(lg3.d == 3);
    check_labelled_graph(lg3);
}

TEST_CASE("maximum-matching-cut construction") {
    auto lg = reduce_x3c_to_maxmc(kFig);
    CHECK(lg.family == "x3c-maxmc");
    CHECK(lg.graph.vertex_count() == 30);
    CHECK(lg.radius == 3);
    CHECK(lg.diameter == 4);
    CHECK(lg.threshold == 12);
    check_labelled_graph(lg);
    CHECK(lg.labels[0] == "K_X:x_1");
    for (const char* s : {"K_X:x_4", "K_X:y_6", "K_S1^1:x_2", "K_S1^2:x_4", "K_S3^2:x_6"})
        CHECK(has_label(lg, s));

    auto blocks = blocks_from_labels(lg);
    CHECK(blocks.size() == kFig.sets.size() + 1);

    auto c = assignment_colouring(kFig, {0, 2}, lg);
    CHECK(tu::ref_valid(lg.graph, c, 1));
    CHECK(tu::ref_value(lg.graph, c) == lg.threshold);
    CHECK(constant_on_blocks(lg, c));

    CHECK_THROWS_AS(assignment_colouring(kFig, {0, 1}, lg), std::invalid_argument);
    CHECK_THROWS_AS(assignment_colouring(kFig, {0, 5}, lg), std::invalid_argument);
    CHECK_THROWS_AS(reduce_x3c_to_maxmc(X3cInstance{3, {{1, 2, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_x3c_to_maxmc(X3cInstance{0, {}}), std::invalid_argument);

    // Family mismatch across the overloads.
    auto nae_lg = reduce_nae_to_dcut(kChain, 2);
    CHECK_THROWS_AS(assignment_colouring(kFig, {0, 2}, nae_lg), std::invalid_argument);
    CHECK_THROWS_AS(assignment_colouring(kChain, {false, true, false}, lg),
                    std::invalid_argument);
}

TEST_CASE("block oracle decides the generated instances") {
    // d-cut family: the block oracle answer must track NAE satisfiability.
    for (const auto& inst : {kChain, kTriangle}) {
        auto lg = reduce_nae_to_dcut(inst, 2);
        auto rep = oracle_enumerate_blocks(lg.graph, blocks_from_labels(lg), 2);
        CHECK(rep.has_dcut[1] == nae_brute_force(inst).has_value());
    }

    // Cut-value threshold tracks exact coverability.
    for (const auto& inst : {kFig, kNoCover}) {
        auto lg = reduce_x3c_to_maxmc(inst);
        auto rep = oracle_enumerate_blocks(lg.graph, blocks_from_labels(lg), 1);
        if (x3c_brute_force(inst).has_value())
            CHECK(rep.max_mc == lg.threshold);
        else
            CHECK(rep.max_mc < lg.threshold);
    }
}

TEST_CASE("search oracle certifies a one-clause construction") {
    auto lg = reduce_nae_to_pmc(kOneClause);
    auto r = oracle_search(lg.graph, Problem::PerfectMatchingCut, 1, 240.0);
    CHECK(r.yes == nae_brute_force(kOneClause).has_value());
    REQUIRE(r.colouring.has_value());
    CHECK(tu::ref_perfect(lg.graph, *r.colouring));
}
