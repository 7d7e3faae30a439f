#include "rainbow/switching.hpp"

#include <algorithm>
#include <cassert>

namespace rainbow {

namespace {

void check_bounds(const DirectedHamCycle& h, const SwitchSpec& spec) {
    int n = h.n();
    if (spec.kind != 1 && spec.kind != 2)
        throw std::invalid_argument("switch spec: kind must be 1 or 2");
    if (spec.tail < 0 || spec.tail >= n || spec.e_prime.first < 0 || spec.e_prime.first >= n ||
        spec.e_prime.second < 0 || spec.e_prime.second >= n)
        throw std::invalid_argument("switch spec: vertex out of range");
    if (spec.e_prime.first == spec.e_prime.second)
        throw std::invalid_argument("switch spec: e' endpoints coincide");
}

void append_walk(const DirectedHamCycle& h, int from, int to, std::vector<int>& out) {
    int v = from;
    out.push_back(v);
    while (v != to) {
        v = h.succ(v);
        out.push_back(v);
    }
}

}  // namespace

SpecCheck check_spec(const DirectedHamCycle& h, const SwitchSpec& spec, SwitchParts* out) {
    check_bounds(h, spec);
    const int x = spec.tail;
    const int xp = spec.e_prime.first;
    const int yp = spec.e_prime.second;
    if (h.has_undirected(xp, yp)) return SpecCheck::EPrimeOnCycle;
    // x must sit on the directed path from y' to x'
    if (h.steps(yp, x) > h.steps(yp, xp)) return SpecCheck::Positional;
    const int pi_x = h.succ(x);
    const int pi_xp = h.succ(xp);
    const int pre_yp = h.pred(yp);
    // pairwise-distinct removed edges (on a cycle with n >= 3 this reduces to
    // three vertex comparisons)
    if (x == xp || pi_xp == yp || pi_x == yp) return SpecCheck::DegenerateRemoved;
    // endpoints of the reconnecting edges; coincident endpoints cannot
    // survive the checks above, but guard anyway
    int a2u, a2v, a3u, a3v;
    if (spec.kind == 1) {
        a2u = x, a2v = pi_xp;
        a3u = pre_yp, a3v = pi_x;
    } else {
        a2u = x, a2v = pre_yp;
        a3u = pi_x, a3v = pi_xp;
    }
    if (a2u == a2v || a3u == a3v) return SpecCheck::DegenerateAdded;
    Edge e1(xp, yp), e2(a2u, a2v), e3(a3u, a3v);
    if (e1 == e2 || e1 == e3 || e2 == e3) return SpecCheck::DegenerateAdded;
    if (h.has_undirected(e2.u, e2.v) || h.has_undirected(e3.u, e3.v))
        return SpecCheck::DegenerateAdded;
    if (out) {
        out->x = x;
        out->pi_x = pi_x;
        out->xp = xp;
        out->pi_xp = pi_xp;
        out->yp = yp;
        out->pre_yp = pre_yp;
        out->removed[0] = Edge(x, pi_x);
        out->removed[1] = Edge(xp, pi_xp);
        out->removed[2] = Edge(pre_yp, yp);
        out->added[0] = e1;
        out->added[1] = e2;
        out->added[2] = e3;
    }
    return SpecCheck::Ok;
}

SwitchParts analyze_spec(const DirectedHamCycle& h, const SwitchSpec& spec) {
    SwitchParts parts;
    switch (check_spec(h, spec, &parts)) {
        case SpecCheck::Ok:
            return parts;
        case SpecCheck::EPrimeOnCycle:
            throw InvalidSpecError("switch spec: e' already lies on the cycle");
        case SpecCheck::Positional:
            throw InvalidSpecError("switch spec: tail is not on the path from y' to x'");
        case SpecCheck::DegenerateRemoved:
            throw DegenerateSpecError("switch spec: removed edges coincide");
        case SpecCheck::DegenerateAdded:
            throw DegenerateSpecError("switch spec: added edges collide");
    }
    throw std::logic_error("unreachable");
}

DirectedHamCycle apply_switching(const DirectedHamCycle& h, const SwitchSpec& spec) {
    SwitchParts p = analyze_spec(h, spec);
    // segments: y'..x, pi(x')..pred(y'), pi(x)..x'
    std::vector<int> order;
    order.reserve(h.n());
    append_walk(h, p.yp, p.x, order);
    size_t mid_begin = order.size();
    append_walk(h, p.pi_xp, p.pre_yp, order);
    if (spec.kind == 2) std::reverse(order.begin() + mid_begin, order.end());
    append_walk(h, p.pi_x, p.xp, order);
    DirectedHamCycle switched = DirectedHamCycle::from_order(order);
    assert(switched.has_directed(p.xp, p.yp));
    assert(!switched.has_undirected(p.x, p.pi_x));
    return switched;
}

bool is_admissible(const Graph& g, const DirectedHamCycle& h, const SwitchSpec& spec) {
    if (g.n() != h.n()) throw std::invalid_argument("is_admissible: size mismatch");
    SwitchParts p = analyze_spec(h, spec);
    for (const Edge& e : p.added)
        if (!g.has_edge(e)) return false;
    return true;
}

std::vector<SwitchSpec> enumerate_admissible(const Graph& g, const DirectedHamCycle& h, int tail,
                                             const ProtectedSet& z) {
    if (g.n() != h.n()) throw std::invalid_argument("enumerate_admissible: size mismatch");
    const int n = h.n();
    if (tail < 0 || tail >= n) throw std::invalid_argument("enumerate_admissible: bad tail");
    if (z.contains(tail, h.succ(tail)))
        throw std::invalid_argument("enumerate_admissible: replaced edge is protected");
    std::vector<SwitchSpec> out;
    SwitchParts p;
    for (int xp = 0; xp < n; ++xp) {
        for (int yp = 0; yp < n; ++yp) {
            if (xp == yp || !g.has_edge(xp, yp)) continue;
            for (int kind = 1; kind <= 2; ++kind) {
                SwitchSpec spec{tail, {xp, yp}, kind};
                if (check_spec(h, spec, &p) != SpecCheck::Ok) continue;
                if (!g.has_edge(p.added[1]) || !g.has_edge(p.added[2])) continue;
                if (z.contains(p.removed[1]) || z.contains(p.removed[2])) continue;
                out.push_back(spec);
            }
        }
    }
    return out;
}

}  // namespace rainbow
