#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow.hpp"

namespace rainbow {

struct Hypergraph {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> edges;   // sorted r-subsets of 0..n-1, pairwise distinct

    Hypergraph(int n_, int r_, std::vector<std::vector<int>> edges_);
};

// v_1 e_1 v_2 e_2 ... v_n e_n with {v_i, v_{i+1}} inside hyperedge e_i
// (cyclically), all vertices distinct and covering, all hyperedge indices
// distinct
struct BergeCycle {
    std::vector<int> vertices;
    std::vector<int> hyperedges;
};

// binom(ceil(n/2) - 1, r - 1), exact; minimum vertex degree above this
// forces a Berge Hamilton cycle for r-uniform hypergraphs (large n)
boost::multiprecision::cpp_int degree_threshold(int n, int r);

// smallest number of hyperedges through any vertex, by enumeration
long long min_vertex_degree(const Hypergraph& h);

struct Shadow {
    Graph g;        // edge uv present iff some hyperedge contains both
    Colouring c;    // colour of uv = index of the lexicographically smallest such hyperedge
};

// the colouring is C(r,2)-bounded since a hyperedge covers at most that
// many pairs; colour ids are hyperedge indices
Shadow shadow_reduce(const Hypergraph& h);

// rainbow Hamilton cycle on the shadow, translated back: consecutive
// vertices are joined by the hyperedge their shadow colour names
std::optional<BergeCycle> berge_hamilton(const Hypergraph& h, const SearchConfig& cfg);

bool verify_berge(const Hypergraph& h, const BergeCycle& b);

// file format: "n m r" header line, then m lines of r ascending vertex ids
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);
std::string hypergraph_to_string(const Hypergraph& h);
void save_hypergraph(const std::string& path, const Hypergraph& h);

// "v e v e ..." on one line
std::string berge_to_string(const BergeCycle& b);

}  // namespace rainbow
