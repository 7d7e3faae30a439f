#pragma once

#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// A cycle switching replaces one cycle edge e = (x, pi(x)) and two companion
// cycle edges by a chosen non-cycle edge e' = {x', y'} and two reconnecting
// edges, yielding a new Hamilton cycle that traverses x' -> y'. Writing pi
// for the successor map, the three removed edges are always
//
//     {x, pi(x)}   {x', pi(x')}   {pred(y'), y'}
//
// and the replacements come in two kinds:
//
//     kind 1 adds  {x', y'}  {x, pi(x')}     {pred(y'), pi(x)}
//     kind 2 adds  {x', y'}  {x, pred(y')}   {pi(x), pi(x')}
//
// subject to x lying on the directed path from y' to x'. Kind 1 keeps all
// three arc segments forward; kind 2 reverses the middle segment.
struct SwitchSpec {
    int tail = 0;                  // x; the replaced cycle edge is (x, pi(x))
    std::pair<int, int> e_prime;   // ordered (x', y'), an edge off the cycle
    int kind = 1;                  // 1 or 2

    friend bool operator==(const SwitchSpec&, const SwitchSpec&) = default;
};

// e' lies on the cycle, or the positional condition fails
struct InvalidSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// vertex coincidences make the removed/added edge sets collide
struct DegenerateSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SwitchParts {
    int x, pi_x, xp, pi_xp, yp, pre_yp;
    Edge removed[3];
    Edge added[3];
};

enum class SpecCheck { Ok, EPrimeOnCycle, Positional, DegenerateRemoved, DegenerateAdded };

// classification without exceptions; fills *out only on Ok
SpecCheck check_spec(const DirectedHamCycle& h, const SwitchSpec& spec, SwitchParts* out);

// throws InvalidSpecError / DegenerateSpecError; returns the named vertices
// and the removed/added edge triples
SwitchParts analyze_spec(const DirectedHamCycle& h, const SwitchSpec& spec);

// the switched cycle; throws on invalid or degenerate specs
DirectedHamCycle apply_switching(const DirectedHamCycle& h, const SwitchSpec& spec);

// true iff every added edge of the switched cycle lies in E(g)
bool is_admissible(const Graph& g, const DirectedHamCycle& h, const SwitchSpec& spec);

// All admissible specs replacing the cycle edge with tail x whose switched
// cycle still contains every edge of z. Ordered by (x', y', kind).
// Requires (x, pi(x)) not protected.
std::vector<SwitchSpec> enumerate_admissible(const Graph& g, const DirectedHamCycle& h, int tail,
                                             const ProtectedSet& z);

}  // namespace rainbow
