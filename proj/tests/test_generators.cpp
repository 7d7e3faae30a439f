#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "rainbow/classification.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

TEST_CASE("the blocked instance pins its colour classes inside the big side") {
    Counterexample ce = gen_counterexample(12, 2);
    CHECK(ce.report.k == 2);
    CHECK(ce.report.side_a.size() == 4);
    CHECK(ce.report.side_b.size() == 8);
    CHECK(is_dirac(ce.g));

    // the 8 edges inside the big side use exactly 3 colours, sizes 3+3+2
    std::map<int, int> inside_class;
    std::set<int> b(ce.report.side_b.begin(), ce.report.side_b.end());
    long long inside = 0;
    for (const Edge& e : ce.g.edges())
        if (b.count(e.u) && b.count(e.v)) {
            ++inside_class[ce.c.colour(e)];
            ++inside;
        }
    CHECK(inside == 8);
    CHECK(inside_class.size() == 3);
    std::vector<int> sizes;
    for (auto& [col, cnt] : inside_class) sizes.push_back(cnt);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3, 3});
    CHECK(ce.report.max_class_size == 3);
    CHECK(ce.report.class_size_bound == 3);
    CHECK(ce.report.forced_inside_edges == 4);

    // cross edges all carry fresh, pairwise-distinct colours
    std::set<int> cross_colours;
    for (const Edge& e : ce.g.edges()) {
        if (b.count(e.u) && b.count(e.v)) continue;
        CHECK(ce.c.multiplicity(ce.c.colour(e)) == 1);
        cross_colours.insert(ce.c.colour(e));
    }
    CHECK(cross_colours.size() == 32);

    // no rainbow spanning cycle exists: a cycle needs 4 inside edges but
    // only 3 inside colours are available
    CHECK_FALSE(oracle::rainbow_hc(ce.g, ce.c).has_value());
}

TEST_CASE("blocked-instance inputs are validated") {
    CHECK_THROWS_AS(gen_counterexample(13, 2), std::invalid_argument);   // odd order
    CHECK_THROWS_AS(gen_counterexample(12, 3), std::invalid_argument);   // odd k
    CHECK_THROWS_AS(gen_counterexample(12, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_counterexample(12, 6), std::invalid_argument);   // k too large
}

TEST_CASE("split-like instances stay split-like within the perturbation budget") {
    Frac gamma(3, 100);
    Graph g = gen_two_clique_like(12, gamma, 5);
    CHECK(is_dirac(g));

    std::vector<int> half{0, 1, 2, 3, 4, 5};
    long long cross = g.edges_across(g.mask_of(half));
    long long budget = gamma.floor_mul(144);
    CHECK(cross <= std::max(budget, 6LL));   // the connecting matching may exceed tiny budgets
    CHECK(cross >= 2);

    Params p;
    CHECK(classify(g, p, 5).tag == StructureTag::CloseToTwoCliques);

    // zero budget leaves exactly the connecting matching
    Graph tight = gen_two_clique_like(12, Frac(0, 1), 9);
    CHECK(tight.edges_across(tight.mask_of(half)) == 6);
    CHECK(is_dirac(tight));
}

TEST_CASE("near-bipartite instances respect their imbalance and budget") {
    Graph g0 = gen_bipartite_like(12, Frac(0, 1), 4);
    CHECK(g0.n() == 12);
    CHECK(is_dirac(g0));
    // balanced with zero budget: exactly the complete bipartite graph
    CHECK(g0.m() == 36);
    Params p;
    CHECK(classify(g0, p, 4).tag == StructureTag::CloseToBipartite);

    Graph g2 = gen_bipartite_like(12, Frac(3, 100), 4, 2);
    CHECK(is_dirac(g2));
    std::vector<int> small_side{0, 1, 2, 3, 4};
    // the small side has 5 vertices and stays independent
    CHECK(g2.edges_inside(g2.mask_of(small_side)) == 0);
    CHECK(classify(g2, p, 4).tag == StructureTag::CloseToBipartite);

    CHECK_THROWS_AS(gen_bipartite_like(12, Frac(3, 100), 4, 3), std::invalid_argument);
    // any negative imbalance selects the parity default
    CHECK(gen_bipartite_like(12, Frac(3, 100), 4, -2).edges() ==
          gen_bipartite_like(12, Frac(3, 100), 4).edges());
}

TEST_CASE("random instances meet the degree floor and are reproducible") {
    Graph a = gen_random_dirac(14, Frac(3, 4), 8);
    Graph b = gen_random_dirac(14, Frac(3, 4), 8);
    Graph c = gen_random_dirac(14, Frac(3, 4), 9);
    CHECK(is_dirac(a));
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    CHECK(gen_random_dirac(10, Frac(1, 1), 1).m() == 45);
    for (uint64_t s = 1; s <= 20; ++s) CHECK(is_dirac(gen_random_dirac(9, Frac(3, 5), s)));
}

TEST_CASE("colouring schemes meet their contracts") {
    Graph g = gen_random_dirac(12, Frac(4, 5), 2);

    Colouring bounded = gen_colouring(g, ColourScheme::Bounded, Frac(1, 4), 3);
    CHECK(bounded.coloured_edges() == g.m());
    CHECK(bounded.max_multiplicity() <= 3);   // floor(12/4)
    Colouring bounded2 = gen_colouring(g, ColourScheme::Bounded, Frac(1, 4), 3);
    CHECK(bounded.multiplicities() == bounded2.multiplicities());

    // a cap below one edge per class is rejected outright
    CHECK_THROWS_AS(gen_colouring(g, ColourScheme::Bounded, Frac(1, 100), 3),
                    std::invalid_argument);

    Colouring proper = gen_colouring(g, ColourScheme::Proper, Frac(1, 4), 3);
    for (int v = 0; v < g.n(); ++v) {
        std::set<int> seen;
        for (int w : g.neighbours(v)) CHECK(seen.insert(proper.colour(v, w)).second);
    }

    Colouring rb = gen_colouring(g, ColourScheme::Rainbow, Frac(1, 4), 3);
    CHECK(rb.num_colours() == g.m());
    CHECK(rb.max_multiplicity() == 1);
}

TEST_CASE("the balanced table instance colours each vertex's edges once per "
          "symbol") {
    LatinInstance li = gen_latin_colouring(4, 6);
    CHECK(li.g.n() == 8);
    CHECK(li.g.m() == 16);
    CHECK(li.c.num_colours() == 4);
    CHECK(li.c.max_multiplicity() == 4);
    for (int v = 0; v < li.g.n(); ++v) {
        std::set<int> seen;
        for (int w : li.g.neighbours(v)) CHECK(seen.insert(li.c.colour(v, w)).second);
    }
    LatinInstance li2 = gen_latin_colouring(4, 6);
    CHECK(li.c.multiplicities() == li2.c.multiplicities());
    CHECK_THROWS_AS(gen_latin_colouring(1, 6), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::RandomDirac, Family::TwoCliqueLike, Family::BipartiteLike,
                     Family::Counterexample, Family::LatinSquare}) {
        auto back = family_from_string(to_string(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_string("nonsense").has_value());
}

TEST_CASE("the one-call front end hands back the right pieces") {
    GenSpec spec;
    spec.family = Family::Counterexample;
    spec.n = 12;
    spec.k = 2;
    Instance inst = realize(spec);
    CHECK(inst.g.n() == 12);
    CHECK(inst.colouring.has_value());
    CHECK(inst.label.find("counterexample") != std::string::npos);

    GenSpec r;
    r.family = Family::RandomDirac;
    r.n = 10;
    r.seed = 4;
    Instance ri = realize(r);
    CHECK(ri.g.n() == 10);
    CHECK_FALSE(ri.colouring.has_value());
}
