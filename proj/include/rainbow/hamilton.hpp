#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct SearchBudget {
    long long max_nodes = 10'000'000;
    double time_limit_s = 0;        // 0 = unlimited

    void validate() const {
        if (max_nodes <= 0) throw std::invalid_argument("budget: max_nodes must be positive");
        if (time_limit_s < 0) throw std::invalid_argument("budget: negative time limit");
    }
};

enum class HamOutcome { Found, Exhausted, Budget };

struct HamResult {
    HamOutcome outcome = HamOutcome::Exhausted;
    std::optional<DirectedHamCycle> cycle;
    long long nodes = 0;
};

// raised by the constructive routines when neither the intended construction
// nor the generic fallback yields a cycle
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-sequence sufficiency test (ascending degrees d1 <= ... <= dm,
// m >= 3): for every k <= m/2, d_k <= k forces d_{m-k} >= m-k.
bool chvatal_check(const std::vector<int>& degrees_sorted);

// Bipartite counterpart on a balanced bipartition (sides of equal size
// m >= 2): the k-th smallest degree on each side must exceed k for every
// k <= m/2. Only edges between the two sides are considered.
bool moon_moser_check(const Graph& g, const std::vector<int>& side_r,
                      const std::vector<int>& side_s);

// Backtracking Hamilton cycle search. Required edges are hard constraints:
// the walk follows them whenever it stands on an endpoint with an unused
// required edge, so each required path is traversed as a unit. Branches are
// ordered by remaining degree with seed-controlled tie-breaks. Exhausted
// means the whole space was searched and no cycle exists.
HamResult find_ham_cycle(const Graph& g, const ProtectedSet& required, const SearchBudget& budget,
                         uint64_t seed);

// Spanning cycle of a graph close to two disjoint cliques A, B that must use
// the two disjoint cross edges f and f'. Builds a spanning path of each side
// between the cross-edge feet (via an auxiliary degree-2 vertex) and
// concatenates; falls back to the generic finder with {f, f'} required.
HamResult two_clique_ham(const Graph& g, const std::vector<int>& side_a, const Edge& f,
                         const Edge& f_prime, const SearchBudget& budget, uint64_t seed);

// Spanning cycle of a near-bipartite graph (sides A, B with
// |B| - |A| = |matching|) through all matching edges, which lie inside B.
// Links the matching edges into one path through distinct A-vertices, finds a
// spanning cycle of the balanced bipartite remainder via an auxiliary vertex,
// and splices. Falls back to the generic finder with the matching required.
HamResult biclique_ham(const Graph& g, const std::vector<int>& side_a,
                       const std::vector<int>& side_b, const std::vector<Edge>& matching,
                       const SearchBudget& budget, uint64_t seed);

}  // namespace rainbow
