#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/classification.hpp"
#include "rainbow/frac.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/hamilton.hpp"

namespace rainbow {

// A family of colour multisets C_1..C_m over colour ids, plus disjoint
// colour groups U_1..U_l of size a each. A selected set T must hit every
// group at least b times while costing every C_i at most an eta fraction
// of its elements.
struct ColourMultisetFamily {
    std::vector<std::vector<int>> sets;     // each C_i as a list with repetition
    std::vector<std::vector<int>> groups;   // U_1..U_l, pairwise disjoint, size a
    int n = 0;                              // scale for the mu*n / nu*n bounds
    Frac mu = Frac(1, 16);                  // no colour exceeds mu*n copies across all C_i
    Frac nu_frac = Frac(1, 20);             // every |C_i| >= nu*n
    int a = 0;
    int b = 1;
    Frac eta = Frac(1, 10);

    // checks the shape constraints: group sizes and disjointness, b <= a,
    // nu*n <= |C_i| <= n, and the mu*n total-multiplicity cap
    void validate() const;
};

// no verified colour set within the retry budget
class SelectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// the seeded backtracker could not produce any starting Hamilton cycle
// through the protected edges (different from running out of resampling
// steps once a cycle exists)
class NoStartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    long long max_steps = 100000;   // resampling steps per restart
    int restarts = 20;
    uint64_t seed = 1;
    bool beta_report = false;       // record per-step admissible counts
    SearchBudget ham_budget;        // budget for each starting-cycle search

    void validate() const;
};

struct ConflictPair {
    Edge e, f;   // distinct cycle edges with equal colour
};

struct SearchStats {
    long long steps = 0;            // resampling steps across all restarts
    int restarts_used = 0;          // restarts begun
    int found_on_restart = -1;
    long long start_nodes = 0;      // backtracker nodes spent on starting cycles
    // recorded only when beta_report is set:
    std::vector<long long> admissible_counts;   // size of the pool drawn from, per step
    std::vector<int> conflict_counts;           // conflict pairs before each step
};

// all unordered same-coloured pairs among the cycle's edges, in edge order
std::vector<ConflictPair> conflict_pairs(const Colouring& c, const DirectedHamCycle& h);

// grows a matching inside the given vertex set greedily in edge order,
// skipping used vertices and used colours; stops once target edges are
// found (target <= 0 means grow to exhaustion)
ProtectedSet greedy_rainbow_matching(const Graph& g, const Colouring& c,
                                     const std::vector<int>& inside, int target);

// Picks T with |T ∩ U_k| >= b per group and |C_i ∖⁺ T| >= (1-eta)|C_i| per
// set: delta-sampling with resampling of violated events, a final direct
// check of both guarantees, and doubling-delta retries. Throws
// SelectionError when every retry fails verification.
std::vector<int> select_colour_set(const ColourMultisetFamily& fam, uint64_t seed);

struct ProtectedChoice {
    ProtectedSet z;
    Graph reduced;          // the search graph: Z's colours are unique here
    Colouring reduced_c;
    std::string note;       // how the choice was made, for run reports
};

// Builds the protected edges and the reduced graph for a closeness tag:
// two-cliques — two vertex-disjoint distinctly-coloured cross edges, all
// other cross edges and all colour-sharing edges removed; bipartite — a
// matching inside the big side selected through a colour family, inside
// edges and selected colours removed, then edges between two low-degree
// vertices dropped. The advertised structure of the output is re-checked.
ProtectedChoice choose_protected_set(const Graph& g, const Colouring& c,
                                     const Classification& cls, const Params& p,
                                     uint64_t seed);

// Resampling search: start from a seeded Hamilton cycle through z, and
// while some colour repeats, replace a uniformly chosen conflicting edge
// by a uniformly chosen admissible switching. Returns a verified rainbow
// Hamilton cycle through z, or nullopt when the budget ends.
std::optional<DirectedHamCycle> switching_search(const Graph& g, const Colouring& c,
                                                 const ProtectedSet& z, const SearchConfig& cfg,
                                                 SearchStats* stats = nullptr);

struct RouteNote {
    std::string route;
    std::string note;
};

struct FindReport {
    StructureTag tag = StructureTag::Unclassified;
    std::vector<RouteNote> attempts;
    SearchStats stats;
    bool found = false;
};

// Full pipeline: classify, build the protected set for closeness tags and
// search the reduced graph, fall back to a direct search otherwise or when
// a structured route fails. Every success is re-verified.
std::optional<DirectedHamCycle> find_rainbow_hc(const Graph& g, const Colouring& c,
                                                const Params& p, const SearchConfig& cfg,
                                                FindReport* report = nullptr,
                                                bool allow_subdirac = false);

// pure recomputation: spanning cycle of g, all colours distinct, z on the cycle
bool verify(const Graph& g, const Colouring& c, const DirectedHamCycle& h,
            const ProtectedSet& z);

}  // namespace rainbow
