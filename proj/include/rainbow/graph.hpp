#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Unordered pair of distinct vertices, stored canonically as (min, max).
struct Edge {
    int u = 0, v = 1;

    Edge() = default;
    Edge(int a, int b) {
        if (a == b) throw std::invalid_argument("Edge: loop " + std::to_string(a));
        u = a < b ? a : b;
        v = a < b ? b : a;
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertex set {0, ..., n-1}.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[static_cast<size_t>(u) * n_ + v] != 0;
    }
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(nbr_[v].size());
    }
    const std::vector<int>& neighbours(int v) const {
        check_vertex(v);
        return nbr_[v];
    }
    int min_degree() const;

    // d(v, S) where S is given as a 0/1 mask of length n
    int degree_in(int v, const std::vector<char>& mask) const;
    // e(S): edges with both endpoints in S
    long long edges_inside(const std::vector<char>& mask) const;
    // e(S, T) for disjoint S, T
    long long edges_between(const std::vector<char>& a, const std::vector<char>& b) const;
    // e(S, V \ S)
    long long edges_across(const std::vector<char>& mask) const;

    // new graph on the same vertex set keeping edges for which keep() is true
    template <class Pred>
    Graph filtered(Pred keep) const {
        std::vector<Edge> kept;
        kept.reserve(edges_.size());
        for (const Edge& e : edges_)
            if (keep(e)) kept.push_back(e);
        return Graph(n_, kept);
    }

    std::vector<char> mask_of(const std::vector<int>& verts) const;
    std::vector<int> complement_of(const std::vector<int>& verts) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<Edge> edges_;       // sorted canonical
    std::vector<char> adj_;         // n*n
    std::vector<std::vector<int>> nbr_;
};

// Total edge -> colour map for one graph, plus colour-class multiplicities.
class Colouring {
public:
    Colouring() = default;
    // colour_per_edge aligned with g.edges(); colours must be >= 0
    Colouring(const Graph& g, const std::vector<int>& colour_per_edge);

    int n() const { return n_; }
    long long coloured_edges() const { return m_; }

    bool has(int u, int v) const;
    int colour(int u, int v) const;       // throws if the pair is uncoloured
    int colour(const Edge& e) const { return colour(e.u, e.v); }

    long long multiplicity(int c) const;
    long long max_multiplicity() const;
    bool is_k_bounded(long long k) const { return max_multiplicity() <= k; }
    int num_colours() const { return static_cast<int>(mult_.size()); }
    const std::map<int, long long>& multiplicities() const { return mult_; }

    // colouring of a subgraph of the host graph (colours carried over)
    Colouring restricted_to(const Graph& sub) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> matrix_;       // n*n, -1 = uncoloured
    std::map<int, long long> mult_;
};

// Hamilton cycle with an orientation, i.e. a successor permutation whose
// functional graph is a single n-cycle.
class DirectedHamCycle {
public:
    explicit DirectedHamCycle(std::vector<int> succ);
    static DirectedHamCycle from_order(const std::vector<int>& order);

    int n() const { return static_cast<int>(succ_.size()); }
    int succ(int v) const { return succ_[check(v)]; }
    int pred(int v) const { return pred_[check(v)]; }
    bool has_directed(int u, int v) const { return succ_[check(u)] == v; }
    bool has_undirected(int u, int v) const {
        return succ_[check(u)] == v || succ_[check(v)] == u;
    }
    // number of edges walked going from u to v along the orientation
    int steps(int u, int v) const {
        int d = pos_[check(v)] - pos_[check(u)];
        return d >= 0 ? d : d + n();
    }

    DirectedHamCycle reversed() const;
    std::vector<int> order() const;            // starts at vertex 0
    std::vector<Edge> edge_set() const;

    friend bool operator==(const DirectedHamCycle& a, const DirectedHamCycle& b) {
        return a.succ_ == b.succ_;
    }

private:
    int check(int v) const {
        if (v < 0 || v >= n()) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        return v;
    }

    std::vector<int> succ_, pred_, pos_;
};

// Edge set whose members a search must keep on the cycle. Pairwise-distinct
// edges always; vertex-disjointness only where a pipeline asks for it.
class ProtectedSet {
public:
    ProtectedSet() = default;
    explicit ProtectedSet(std::vector<Edge> edges, bool require_matching = false);

    bool empty() const { return edges_.empty(); }
    size_t size() const { return edges_.size(); }
    bool contains(int u, int v) const;
    bool contains(const Edge& e) const { return contains(e.u, e.v); }
    bool is_matching() const;
    bool subset_of(const Graph& g) const;
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<Edge> edges_;   // sorted unique
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// File formats
// ------------
// graph:       header "n m", then one "u v c" line per edge with
//              0 <= u < v < n and colour c >= 0; '#' starts a comment line
// cycle:       one line of n vertex ids in successor order
// edge set:    one "u v" line per edge
std::pair<Graph, Colouring> load_graph(const std::string& path);
std::pair<Graph, Colouring> parse_graph(const std::string& text);
std::string graph_to_string(const Graph& g, const Colouring& c);
void save_graph(const std::string& path, const Graph& g, const Colouring& c);

DirectedHamCycle parse_cycle(const std::string& text, int n);
DirectedHamCycle load_cycle(const std::string& path, int n);
std::string cycle_to_string(const DirectedHamCycle& h);
void save_cycle(const std::string& path, const DirectedHamCycle& h);

ProtectedSet parse_edge_set(const std::string& text, int n);
ProtectedSet load_edge_set(const std::string& path, int n);
std::string edge_set_to_string(const ProtectedSet& z);

// 2*delta(G) >= n, exact; n < 3 is rejected
bool is_dirac(const Graph& g);

// E(h) subset of E(g) and z subset of E(h); sizes must match
bool validate_ham_cycle(const Graph& g, const DirectedHamCycle& h, const ProtectedSet& z);

// all edges coloured and pairwise distinctly; throws on an uncoloured edge
bool is_rainbow(const Colouring& c, const std::vector<Edge>& edges);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rainbow
