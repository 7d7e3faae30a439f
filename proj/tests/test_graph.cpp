#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "rainbow/frac.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

TEST_CASE("edges store their endpoints in canonical order") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e == Edge(2, 5));
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("graph adjacency, degrees and validation") {
    Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(0, 2)});
    CHECK(g.n() == 4);
    CHECK(g.m() == 5);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(3) == 2);
    CHECK(g.min_degree() == 2);
    CHECK(g.neighbours(0) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(g.has_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("edge counting against masks") {
    Graph g = oracle::complete(4);
    std::vector<char> s = g.mask_of({0, 1});
    CHECK(g.edges_inside(s) == 1);
    CHECK(g.edges_across(s) == 4);
    CHECK(g.edges_between(g.mask_of({0, 1}), g.mask_of({2, 3})) == 4);
    CHECK(g.degree_in(2, s) == 2);
    CHECK(g.complement_of({0, 2}) == std::vector<int>{1, 3});
}

TEST_CASE("filtered keeps the predicate's edges only") {
    Graph g = oracle::complete(4);
    Graph h = g.filtered([](const Edge& e) { return e.u == 0; });
    CHECK(h.n() == 4);
    CHECK(h.m() == 3);
    CHECK(h.has_edge(0, 3));
    CHECK_FALSE(h.has_edge(1, 2));
}

TEST_CASE("colouring stores multiplicities and restricts to subgraphs") {
    Graph g(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3)});
    Colouring c(g, {7, 7, 3, 9});
    CHECK(c.coloured_edges() == 4);
    CHECK(c.colour(1, 0) == 7);
    CHECK(c.colour(Edge(2, 3)) == 9);
    CHECK(c.multiplicity(7) == 2);
    CHECK(c.multiplicity(42) == 0);
    CHECK(c.max_multiplicity() == 2);
    CHECK(c.is_k_bounded(2));
    CHECK_FALSE(c.is_k_bounded(1));
    CHECK(c.num_colours() == 3);
    CHECK(c.has(0, 1));
    CHECK_FALSE(c.has(0, 3));
    CHECK_THROWS_AS(c.colour(0, 3), std::invalid_argument);

    Graph sub = g.filtered([](const Edge& e) { return e.u != 0; });
    Colouring cs = c.restricted_to(sub);
    CHECK(cs.coloured_edges() == 2);
    CHECK(cs.colour(1, 2) == 3);
    CHECK_FALSE(cs.has(0, 1));

    CHECK_THROWS_AS(Colouring(g, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Colouring(g, {1, 2, 3, -1}), std::invalid_argument);
}

TEST_CASE("directed cycle bookkeeping") {
    DirectedHamCycle h = DirectedHamCycle::from_order({0, 2, 1, 3});
    CHECK(h.n() == 4);
    CHECK(h.succ(0) == 2);
    CHECK(h.succ(3) == 0);
    CHECK(h.pred(0) == 3);
    CHECK(h.has_directed(2, 1));
    CHECK_FALSE(h.has_directed(1, 2));
    CHECK(h.has_undirected(1, 2));
    CHECK(h.steps(0, 3) == 3);
    CHECK(h.steps(3, 0) == 1);
    CHECK(h.steps(2, 1) == 1);
    CHECK(h.steps(1, 2) == 3);
    CHECK(h.order() == std::vector<int>{0, 2, 1, 3});

    DirectedHamCycle r = h.reversed();
    CHECK(r.succ(0) == 3);
    CHECK(r.succ(2) == 0);

    std::vector<Edge> es = h.edge_set();
    std::set<Edge> expect{Edge(0, 2), Edge(2, 1), Edge(1, 3), Edge(3, 0)};
    CHECK(std::set<Edge>(es.begin(), es.end()) == expect);

    CHECK(h == DirectedHamCycle::from_order({2, 1, 3, 0}));
    CHECK_FALSE(h == r);
}

TEST_CASE("successor maps that are not single cycles are rejected") {
    CHECK_THROWS_AS(DirectedHamCycle({1, 0, 3, 2}), std::invalid_argument);   // two 2-cycles
    CHECK_THROWS_AS(DirectedHamCycle({1, 1, 0}), std::invalid_argument);      // not injective
    CHECK_THROWS_AS(DirectedHamCycle({0, 1, 2}), std::invalid_argument);      // fixed points
    CHECK_THROWS_AS(DirectedHamCycle({1, 0}), std::invalid_argument);         // too short
    CHECK_THROWS_AS(DirectedHamCycle::from_order({0, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DirectedHamCycle::from_order({0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("protected sets") {
    ProtectedSet z({Edge(4, 5), Edge(0, 1)});
    CHECK(z.size() == 2);
    CHECK(z.contains(1, 0));
    CHECK_FALSE(z.contains(0, 2));
    CHECK(z.is_matching());
    CHECK(z.edges() == std::vector<Edge>{Edge(0, 1), Edge(4, 5)});

    ProtectedSet path({Edge(0, 1), Edge(1, 2)});
    CHECK_FALSE(path.is_matching());
    CHECK_THROWS_AS(ProtectedSet({Edge(0, 1), Edge(1, 2)}, true), std::invalid_argument);
    CHECK_THROWS_AS(ProtectedSet({Edge(0, 1), Edge(1, 0)}), std::invalid_argument);

    Graph g(6, {Edge(0, 1), Edge(4, 5)});
    CHECK(z.subset_of(g));
    CHECK_FALSE(path.subset_of(g));
    CHECK(ProtectedSet().empty());
}

TEST_CASE("graph files round-trip and report parse errors by line") {
    Graph g(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
    Colouring c(g, {0, 1, 2, 3, 4});
    auto [g2, c2] = parse_graph(graph_to_string(g, c));
    CHECK(g2.n() == g.n());
    CHECK(g2.edges() == g.edges());
    // colours align with the sorted edge list: (0,1) (0,4) (1,2) (2,3) (3,4)
    CHECK(c2.colour(0, 4) == 1);
    CHECK(c2.colour(3, 4) == 4);

    auto [g3, c3] = parse_graph("# comment\n3 1\n\n0 2 7\n");
    CHECK(g3.m() == 1);
    CHECK(c3.colour(0, 2) == 7);

    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1 0\n"), ParseError);        // fewer lines than m
    CHECK_THROWS_AS(parse_graph("3 1\n1 0 0\n"), ParseError);        // u >= v
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 -2\n"), ParseError);       // negative colour
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 0 9\n"), ParseError);      // trailing token
    CHECK_THROWS_AS(parse_graph("3 2\n0 1 0\n0 1 5\n"), ParseError); // duplicate edge
    try {
        parse_graph("3 1\n0 7 0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("cycle and edge-set files round-trip") {
    DirectedHamCycle h = DirectedHamCycle::from_order({0, 3, 1, 2});
    DirectedHamCycle h2 = parse_cycle(cycle_to_string(h), 4);
    CHECK(h == h2);
    CHECK_THROWS_AS(parse_cycle("0 1 2 2", 4), ParseError);
    CHECK_THROWS_AS(parse_cycle("0 1 2", 4), ParseError);
    CHECK_THROWS_AS(parse_cycle("0 1 2 4", 4), ParseError);
    CHECK_THROWS_AS(parse_cycle("", 4), ParseError);

    ProtectedSet z({Edge(0, 1), Edge(2, 3)});
    ProtectedSet z2 = parse_edge_set(edge_set_to_string(z), 4);
    CHECK(z2.edges() == z.edges());
    CHECK(parse_edge_set("", 4).empty());
    CHECK_THROWS_AS(parse_edge_set("0 9\n", 4), ParseError);
}

TEST_CASE("minimum-degree test for spanning-cycle guarantees") {
    CHECK(is_dirac(oracle::complete(4)));
    CHECK(is_dirac(oracle::complete_bipartite(3, 3)));
    Graph c5(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
    CHECK_FALSE(is_dirac(c5));                       // 2*2 < 5
    CHECK_FALSE(is_dirac(oracle::two_cliques(8)));   // 2*3 < 8
    CHECK_THROWS_AS(is_dirac(Graph(2, {Edge(0, 1)})), std::invalid_argument);
}

TEST_CASE("cycle validation against a host graph") {
    Graph g = oracle::complete_bipartite(3, 3);
    DirectedHamCycle h = DirectedHamCycle::from_order({0, 3, 1, 4, 2, 5});
    CHECK(validate_ham_cycle(g, h, ProtectedSet()));
    CHECK(validate_ham_cycle(g, h, ProtectedSet({Edge(0, 3), Edge(1, 4)})));
    CHECK_FALSE(validate_ham_cycle(g, h, ProtectedSet({Edge(0, 4)})));
    Graph missing = g.filtered([](const Edge& e) { return e != Edge(2, 5); });
    CHECK_FALSE(validate_ham_cycle(missing, h, ProtectedSet()));
    Graph small = oracle::complete(4);
    CHECK_THROWS_AS(validate_ham_cycle(small, h, ProtectedSet()), std::invalid_argument);
}

TEST_CASE("rainbow check") {
    Graph g = oracle::complete(4);
    Colouring c(g, {0, 1, 2, 3, 4, 5});
    CHECK(is_rainbow(c, {Edge(0, 1), Edge(2, 3)}));
    Colouring rep(g, {0, 1, 2, 3, 0, 5});
    std::vector<Edge> all(g.edges());
    CHECK_FALSE(is_rainbow(rep, all));
    Graph h(3, {Edge(0, 1)});
    Colouring partial(h, {0});
    CHECK_THROWS_AS(is_rainbow(partial, {Edge(1, 2)}), std::invalid_argument);
}

TEST_CASE("fractions parse from ratio and decimal forms") {
    CHECK(Frac::parse("1/4") == Frac(1, 4));
    CHECK(Frac::parse("0.25") == Frac(1, 4));
    CHECK(Frac::parse(" 3 ") == Frac(3, 1));
    CHECK(Frac::parse("0.005") == Frac(1, 200));
    CHECK(Frac::parse("2/8") == Frac(1, 4));
    CHECK_THROWS(Frac::parse("1/0"));
    CHECK_THROWS(Frac::parse("abc"));
    CHECK_THROWS_AS(Frac(1, 0), std::invalid_argument);
}

TEST_CASE("fraction arithmetic and scaled comparisons are exact") {
    Frac half(1, 2);
    CHECK(half.floor_mul(7) == 3);
    CHECK(half.ceil_mul(7) == 4);
    CHECK(half.floor_mul(8) == 4);
    CHECK(Frac(1, 4).floor_mul(10) == 2);
    CHECK(Frac(1, 4).ceil_mul(10) == 3);

    CHECK(half.le_mul(3, 6));        // 3 <= 3
    CHECK(half.le_mul(2, 6));        // 2 <= 3
    CHECK_FALSE(half.le_mul(4, 6));
    CHECK(half.ge_mul(3, 6));        // 3 >= 3
    CHECK(half.ge_mul(4, 6));
    CHECK_FALSE(half.ge_mul(2, 6));

    CHECK(Frac(1, 3) + Frac(1, 6) == half);
    CHECK(half - Frac(1, 6) == Frac(1, 3));
    CHECK(Frac(2, 3) * Frac(3, 4) == half);
    CHECK(Frac(1, 3) < Frac(1, 2));
    CHECK(Frac(1, 2) <= Frac(2, 4));

    // stays exact where doubles would round
    Frac tiny(1, 3);
    CHECK(tiny.le_mul(333333333333333333LL, 999999999999999999LL));
    CHECK_FALSE(tiny.le_mul(333333333333333334LL, 999999999999999999LL));
}

TEST_CASE("random streams are deterministic and well-ranged") {
    Rng a(42), b(42), c(43);
    std::vector<uint64_t> s1, s2;
    for (int i = 0; i < 16; ++i) {
        s1.push_back(a.next());
        s2.push_back(b.next());
    }
    CHECK(s1 == s2);
    CHECK(c.next() != s1[0]);

    Rng r(7);
    for (int i = 0; i < 200; ++i) {
        uint64_t x = r.below(13);
        CHECK(x < 13);
    }
    CHECK(r.below(0) == 0);

    std::vector<int> v1{0, 1, 2, 3, 4, 5, 6, 7}, v2 = v1;
    Rng ra(5), rb(5);
    ra.shuffle(v1);
    rb.shuffle(v2);
    CHECK(v1 == v2);
    std::sort(v1.begin(), v1.end());
    CHECK(v1 == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(9, 3) == derive_seed(9, 3));
}
