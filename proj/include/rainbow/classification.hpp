#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/frac.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct Params {
    Frac nu{1, 20};
    Frac tau{1, 5};
    Frac gamma{1, 20};
    Frac eps{1, 10};
    Frac alpha{1, 10};
    Frac eta{1, 10};

    void validate() const;   // 0 < nu <= tau < 1, every field in (0,1)
};

// Outcome of the structure test: a Dirac graph either looks like a complete
// balanced bipartite graph (few edges inside a half-sized set), like two
// disjoint cliques (few edges leaving one), or expands robustly. Small
// graphs may certify none of the three.
enum class StructureTag { CloseToBipartite, CloseToTwoCliques, RobustExpander, Unclassified };

const char* to_string(StructureTag tag);

struct ExpanderReport {
    bool expands = false;     // sampled mode: "no violation found" only
    bool exhaustive = false;
    long long sets_tested = 0;
    std::optional<std::vector<int>> violation;   // X with |RN(X)| < |X| + nu*n
};

struct Classification {
    StructureTag tag = StructureTag::Unclassified;
    std::optional<std::vector<int>> partition;   // witness A, sorted, |A| = floor(n/2)
    std::optional<Frac> gamma_best;              // achieved edge count / n^2
    std::optional<ExpanderReport> certificate;
};

// Repaired near-two-cliques partition: (A1) sides within eps*n of each
// other, (A2)/(A4) all but eps*n vertices of each side have internal degree
// >= (1/2-eps)n, (A3)/(A5) every vertex has internal degree >= (1/4-eps)n.
struct TwoCliquePartition {
    std::vector<int> a, b;    // sorted
    Frac eps;                 // smallest value for which all five hold
    int min_cross_a = 0;      // min over a in A of d(a,B), reported only
    int min_cross_b = 0;
};

// Repaired near-bipartite partition: (B1) 0 <= |B|-|A| <= alpha*n, (B2)/(B4)
// all but alpha*n vertices of each side have cross degree >= (1/2-eps)n,
// (B3) every A-vertex has cross degree >= nu*n, (B5) every B-vertex has
// cross degree >= (1/4-eps)n, (B6) every B-vertex has internal degree
// <= 2*nu*n unless |A| = floor(n/2).
struct BicliquePartition {
    std::vector<int> a, b;    // sorted, |a| <= |b|
    Frac alpha, eps, nu;
};

struct RepairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {v : |N(v) ∩ x_set| >= nu*n}, sorted
std::vector<int> robust_neighbourhood(const Graph& g, const std::vector<int>& x_set,
                                      const Frac& nu);

// Exhaustive check over every X with tau*n <= |X| <= (1-tau)*n that
// |RN_nu(X)| >= |X| + nu*n. Only for n <= 20.
ExpanderReport robust_expander_exhaustive(const Graph& g, const Frac& nu, const Frac& tau);

// One-sided sampled test: a violation disproves expansion; surviving all
// trials is evidence, not proof.
ExpanderReport robust_expander_sampled(const Graph& g, const Frac& nu, const Frac& tau,
                                       long long trials, uint64_t seed);

enum class ClosenessTarget { Bipartite, TwoCliques };

struct ClosenessResult {
    Frac gamma_best;          // e(A)/n^2 or e(A, V\A)/n^2
    std::vector<int> witness; // A, sorted, |A| = floor(n/2)
};

// Global minimum over all half-sized sets by enumeration; n <= 20 only.
ClosenessResult closeness_exact(const Graph& g, ClosenessTarget target);

// Seeded swap hill-climbing from random starts, best over all restarts.
ClosenessResult closeness_local(const Graph& g, ClosenessTarget target, uint64_t seed,
                                int restarts);

// exact for n <= 20, local search otherwise
ClosenessResult closeness(const Graph& g, ClosenessTarget target, uint64_t seed,
                          int restarts = 8);

struct ClassifyOptions {
    int restarts = 8;             // closeness local search restarts (n > 20)
    long long trials = 2000;      // sampled expander trials
};

// Structure trichotomy. Two-cliques closeness is tested before bipartite
// closeness: the two-cliques witness (no edges leaving a clique) is also a
// fair bipartite witness at small n (a half-sized set straddling both
// cliques has few inside edges), so the more specific shape must win.
// Whichever closeness certifies within p.gamma is returned with its witness;
// otherwise a sampled expander test decides between RobustExpander and
// Unclassified.
Classification classify(const Graph& g, const Params& p, uint64_t seed,
                        const ClassifyOptions& opt = {});

// Direct re-checks of the partition properties; repair outputs must pass.
bool two_clique_properties_hold(const Graph& g, const std::vector<int>& a,
                                const std::vector<int>& b, const Frac& eps);
bool biclique_properties_hold(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b, const Frac& alpha, const Frac& eps,
                              const Frac& nu);

// Moves every vertex with inside degree <= n/4 to the other side, then
// certifies the smallest eps <= 1/4 for which the five partition properties
// hold. Inputs that are not actually close to a two-clique split (more than
// n^2/10 edges across a0) are rejected up front.
TwoCliquePartition repair_two_clique(const Graph& g, const std::vector<int>& a0);

// Three-stage repair: swap vertices with cross degree <= (1/4-gamma)n,
// relabel so B is the larger side, then move up to floor((|B|-|A|)/2)
// B-vertices with internal degree >= 2*nu*n into A. Certifies the smallest
// t = alpha = eps <= 1/5 for which the six properties hold with the given
// nu. Inputs with more than n^2/10 edges inside a0 are rejected up front.
BicliquePartition repair_biclique(const Graph& g, const std::vector<int>& a0, const Frac& nu,
                                  const Frac& gamma);

}  // namespace rainbow
