#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "rainbow/hamilton.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// all graphs on n vertices, as edge bitmasks
Graph graph_from_mask(int n, unsigned mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace

TEST_CASE("degree-sequence sufficiency test") {
    CHECK(chvatal_check({4, 4, 4, 4, 4}));
    CHECK(chvatal_check({2, 2, 2}));
    CHECK_FALSE(chvatal_check({2, 2, 2, 2, 2}));        // 5-cycle: sufficient degrees absent
    CHECK(chvatal_check({2, 3, 3, 4, 4, 4}));
    CHECK_THROWS_AS(chvatal_check({3, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(chvatal_check({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(chvatal_check({0, 1, 5}), std::invalid_argument);
}

TEST_CASE("whenever the degree test passes, a spanning cycle exists") {
    // every graph on 6 vertices with minimum degree 2
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        Graph g = graph_from_mask(6, mask);
        if (g.min_degree() < 2) continue;
        if (chvatal_check(sorted_degrees(g))) CHECK(oracle::ham_cycle_exists(g));
    }
}

TEST_CASE("bipartite degree test matches existence on balanced bipartitions") {
    Graph k33 = oracle::complete_bipartite(3, 3);
    CHECK(moon_moser_check(k33, {0, 1, 2}, {3, 4, 5}));
    CHECK(oracle::ham_cycle_exists(k33));

    // a perfect matching fails the test (and indeed has no spanning cycle)
    Graph match(6, {Edge(0, 3), Edge(1, 4), Edge(2, 5)});
    CHECK_FALSE(moon_moser_check(match, {0, 1, 2}, {3, 4, 5}));

    // sides of size 4: sweep all bipartite graphs over a seeded sample
    Rng rng(11);
    std::vector<int> left{0, 1, 2, 3}, right{4, 5, 6, 7};
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Edge> es;
        for (int u : left)
            for (int v : right)
                if (rng.below(2)) es.emplace_back(u, v);
        Graph g(8, es);
        if (moon_moser_check(g, left, right)) CHECK(oracle::ham_cycle_exists(g));
    }

    CHECK_THROWS_AS(moon_moser_check(k33, {0, 1}, {3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(moon_moser_check(k33, {0, 1, 2}, {2, 4, 5}), std::invalid_argument);
}

TEST_CASE("backtracking search agrees with the exhaustive oracle on all "
          "5-vertex graphs") {
    SearchBudget budget;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        Graph g = graph_from_mask(5, mask);
        HamResult res = find_ham_cycle(g, ProtectedSet(), budget, 1);
        bool exists = oracle::ham_cycle_exists(g);
        CHECK(res.outcome == (exists ? HamOutcome::Found : HamOutcome::Exhausted));
        if (res.cycle) CHECK(validate_ham_cycle(g, *res.cycle, ProtectedSet()));
    }
}

TEST_CASE("required edges are walked as units") {
    Graph g = oracle::complete(6);
    ProtectedSet matching({Edge(0, 1), Edge(2, 3)});
    HamResult res = find_ham_cycle(g, matching, SearchBudget(), 3);
    REQUIRE(res.outcome == HamOutcome::Found);
    CHECK(validate_ham_cycle(g, *res.cycle, matching));

    ProtectedSet path({Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    res = find_ham_cycle(g, path, SearchBudget(), 3);
    REQUIRE(res.outcome == HamOutcome::Found);
    CHECK(validate_ham_cycle(g, *res.cycle, path));

    // three required edges at one vertex can never be on a cycle
    ProtectedSet claw({Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    CHECK_THROWS_AS(find_ham_cycle(g, claw, SearchBudget(), 3), std::invalid_argument);

    // a required short cycle is rejected
    ProtectedSet tri({Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    CHECK_THROWS_AS(find_ham_cycle(g, tri, SearchBudget(), 3), std::invalid_argument);

    CHECK_THROWS_AS(find_ham_cycle(g, ProtectedSet({Edge(7, 8)}), SearchBudget(), 3),
                    std::invalid_argument);
}

TEST_CASE("node budgets cut the search off") {
    Graph g = oracle::two_cliques(16);   // no spanning cycle: exhausting takes work
    SearchBudget tight;
    tight.max_nodes = 5;
    HamResult res = find_ham_cycle(g, ProtectedSet(), tight, 1);
    CHECK(res.outcome == HamOutcome::Budget);
    CHECK_FALSE(res.cycle.has_value());
    CHECK(res.nodes >= 1);

    SearchBudget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.max_nodes = 10;
    bad.time_limit_s = -1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("two-clique assembly runs through both connector edges") {
    // two 6-cliques joined by the disjoint cross edges {0,6} and {5,11}
    int n = 12, half = 6;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((u < half) == (v < half)) es.emplace_back(u, v);
    es.emplace_back(0, 6);
    es.emplace_back(5, 11);
    Graph g(n, es);

    std::vector<int> side_a{0, 1, 2, 3, 4, 5};
    HamResult res = two_clique_ham(g, side_a, Edge(0, 6), Edge(5, 11), SearchBudget(), 1);
    REQUIRE(res.outcome == HamOutcome::Found);
    CHECK(validate_ham_cycle(g, *res.cycle, ProtectedSet({Edge(0, 6), Edge(5, 11)})));

    CHECK_THROWS_AS(two_clique_ham(g, side_a, Edge(0, 6), Edge(0, 11), SearchBudget(), 1),
                    std::invalid_argument);   // connectors share a vertex
    CHECK_THROWS_AS(two_clique_ham(g, side_a, Edge(1, 2), Edge(5, 11), SearchBudget(), 1),
                    std::invalid_argument);   // first connector does not cross
}

TEST_CASE("near-bipartite assembly threads the surplus matching") {
    // complete bipartite 4 x 6 plus a 2-edge matching inside the big side
    std::vector<Edge> es;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 10; ++v) es.emplace_back(u, v);
    es.emplace_back(4, 5);
    es.emplace_back(6, 7);
    Graph g(10, es);
    std::vector<int> side_a{0, 1, 2, 3}, side_b{4, 5, 6, 7, 8, 9};
    std::vector<Edge> matching{Edge(4, 5), Edge(6, 7)};

    HamResult res = biclique_ham(g, side_a, side_b, matching, SearchBudget(), 1);
    REQUIRE(res.outcome == HamOutcome::Found);
    CHECK(validate_ham_cycle(g, *res.cycle, ProtectedSet(matching)));

    CHECK_THROWS_AS(biclique_ham(g, side_a, side_b, {Edge(4, 5)}, SearchBudget(), 1),
                    std::invalid_argument);   // wrong matching size
    CHECK_THROWS_AS(biclique_ham(g, {0, 1, 2}, side_b, matching, SearchBudget(), 1),
                    std::invalid_argument);   // sides do not cover the graph
}

TEST_CASE("searches are deterministic for a fixed seed") {
    Graph g = oracle::complete(9);
    HamResult a = find_ham_cycle(g, ProtectedSet(), SearchBudget(), 17);
    HamResult b = find_ham_cycle(g, ProtectedSet(), SearchBudget(), 17);
    REQUIRE(a.cycle.has_value());
    REQUIRE(b.cycle.has_value());
    CHECK(*a.cycle == *b.cycle);
    CHECK(a.nodes == b.nodes);
}
