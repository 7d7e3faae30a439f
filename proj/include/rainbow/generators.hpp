#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow/frac.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// generation succeeded but the instance could not be completed (e.g. the
// Dirac patch budget ran out); retry with a different seed
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CounterexampleReport {
    int k = 0;
    std::vector<int> side_a, side_b;
    long long max_class_size = 0;       // largest colour class actually produced
    long long class_size_bound = 0;     // ceil(k*|B| / (2*(2k-1)))
    long long forced_inside_edges = 0;  // every Hamilton cycle uses exactly this many B-edges
};

struct Counterexample {
    Graph g;
    Colouring c;
    CounterexampleReport report;
};

// Dirac graph with a bounded colouring but no rainbow Hamilton cycle:
// small side A, big side B, complete across, k-regular inside B with
// only 2k-1 colours there. n must be even, k even and >= 2.
Counterexample gen_counterexample(int n, int k);

// two cliques joined by the minimum cross edges needed for the Dirac bound,
// plus seeded cross insertions filling the floor(gamma*n^2) budget
Graph gen_two_clique_like(int n, const Frac& gamma, uint64_t seed);

// complete bipartite with sides (n-imbalance)/2 and (n+imbalance)/2 plus a
// circulant inside the big side covering the Dirac deficit, plus seeded
// inside-side insertions filling the budget; imbalance -1 means n mod 2
Graph gen_bipartite_like(int n, const Frac& gamma, uint64_t seed, int imbalance = -1);

// G(n,p) conditioned on min degree >= n/2 by patching deficient vertices
// towards their lowest-degree non-neighbours; 1/2 < p <= 1
Graph gen_random_dirac(int n, const Frac& p, uint64_t seed);

enum class ColourScheme { Bounded, Proper, Rainbow };

// bounded: classes of size floor(mu*n) dealt over a seeded edge shuffle;
// proper: greedy smallest-free-colour (seed unused); rainbow: all distinct
Colouring gen_colouring(const Graph& g, ColourScheme scheme, const Frac& mu, uint64_t seed);

struct LatinInstance {
    Graph g;   // K_{n,n}: rows 0..n-1, columns n..2n-1
    Colouring c;
};

// proper n-colouring of K_{n,n} from a seeded isotopy of the cyclic Latin square
LatinInstance gen_latin_colouring(int n, uint64_t seed);

enum class Family { RandomDirac, TwoCliqueLike, BipartiteLike, Counterexample, LatinSquare };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct GenSpec {
    Family family = Family::RandomDirac;
    int n = 0;
    Frac gamma = Frac::of(0);  // two_clique_like / bipartite_like
    Frac p = Frac(3, 4);       // random_dirac
    int k = 2;                 // counterexample
    int imbalance = -1;        // bipartite_like
    uint64_t seed = 1;
};

struct Instance {
    Graph g;
    // set for families that carry their own colouring (counterexample, latin);
    // others get coloured separately
    std::optional<Colouring> colouring;
    std::string label;
};

Instance realize(const GenSpec& spec);

}  // namespace rainbow
