#include "rainbow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

long long floor_half_up(int n) { return (n + 1) / 2; }   // ceil(n/2)

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// offsets 1..half on ring of size cnt, vertex ids base..base+cnt-1
std::vector<Edge> circulant_edges(int base, int cnt, int half) {
    std::vector<Edge> out;
    for (int j = 1; j <= half; ++j)
        for (int i = 0; i < cnt; ++i) {
            int u = base + i, v = base + (i + j) % cnt;
            if (u != v) out.emplace_back(u, v);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void audit(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(std::string("generator audit failed: ") + msg);
}

}  // namespace

Counterexample gen_counterexample(int n, int k) {
    require(n % 2 == 0, "n must be even");
    require(k >= 2 && k % 2 == 0, "k must be even and at least 2");
    require(k < floor_half_up(n), "k must be smaller than half of n");
    int na = n / 2 - k, nb = n / 2 + k;
    require(na >= 1, "small side would be empty");

    std::vector<Edge> edges;
    std::vector<int> colours;
    std::vector<Edge> inside = circulant_edges(na, nb, k / 2);
    audit(static_cast<long long>(inside.size()) == static_cast<long long>(k) * nb / 2,
          "circulant is not k-regular");
    for (size_t i = 0; i < inside.size(); ++i) {
        edges.push_back(inside[i]);
        colours.push_back(static_cast<int>(i % (2 * k - 1)));
    }
    int fresh = 2 * k - 1;
    for (int a = 0; a < na; ++a)
        for (int b = na; b < n; ++b) {
            edges.emplace_back(a, b);
            colours.push_back(fresh++);
        }

    // keep graph edge order (sorted) aligned with the colour list
    std::vector<size_t> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t x, size_t y) { return edges[x] < edges[y]; });
    std::vector<Edge> sorted_edges;
    std::vector<int> sorted_colours;
    for (size_t i : idx) {
        sorted_edges.push_back(edges[i]);
        sorted_colours.push_back(colours[i]);
    }
    Graph g(n, sorted_edges);
    Colouring c(g, sorted_colours);

    Counterexample out{std::move(g), std::move(c), {}};
    out.report.k = k;
    for (int v = 0; v < na; ++v) out.report.side_a.push_back(v);
    for (int v = na; v < n; ++v) out.report.side_b.push_back(v);
    long long e_inside = static_cast<long long>(inside.size());
    out.report.class_size_bound = (e_inside + (2 * k - 2)) / (2 * k - 1);
    out.report.forced_inside_edges = n - 2LL * na;
    for (const auto& [t, mult] : out.c.multiplicities())
        out.report.max_class_size = std::max(out.report.max_class_size, mult);

    audit(is_dirac(out.g), "counterexample is not Dirac");
    audit(out.report.forced_inside_edges == 2LL * k, "side sizes off");
    return out;
}

namespace {

// fill the remaining insertion budget with distinct seeded picks from a pool
void add_seeded(std::set<Edge>& es, const std::vector<Edge>& pool, long long want, Rng& rng) {
    if (want <= 0 || pool.empty()) return;
    long long attempts = 0, cap = 40 * want + 100;
    long long added = 0;
    while (added < want && attempts < cap) {
        ++attempts;
        const Edge& e = pool[rng.below(pool.size())];
        if (es.insert(e).second) ++added;
    }
}

Graph finish(int n, const std::set<Edge>& es) {
    return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace

Graph gen_two_clique_like(int n, const Frac& gamma, uint64_t seed) {
    require(n >= 8, "n must be at least 8");
    require(gamma.num >= 0 && gamma < Frac(1, 10), "gamma must lie in [0, 0.1)");
    int na = n / 2, nb = n - na;
    std::set<Edge> es;
    for (int u = 0; u < na; ++u)
        for (int v = u + 1; v < na; ++v) es.emplace(u, v);
    for (int u = na; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace(u, v);

    long long patched = 0;
    if (n % 2 == 0) {
        for (int i = 0; i < na; ++i) es.emplace(i, na + i), ++patched;
    } else {
        // the small side needs two cross edges per vertex, the big side one
        for (int i = 0; i < na; ++i) {
            es.emplace(i, na + (2 * i) % nb);
            es.emplace(i, na + (2 * i + 1) % nb);
            patched += 2;
        }
    }
    long long budget = gamma.floor_mul(static_cast<long long>(n) * n);
    std::vector<Edge> pool;
    for (int u = 0; u < na; ++u)
        for (int v = na; v < n; ++v)
            if (!es.count(Edge(u, v))) pool.emplace_back(u, v);
    Rng rng(seed);
    add_seeded(es, pool, budget - patched, rng);

    Graph g = finish(n, es);
    audit(is_dirac(g), "two-clique instance is not Dirac");
    std::vector<int> side_a(na);
    std::iota(side_a.begin(), side_a.end(), 0);
    long long cross = g.edges_across(g.mask_of(side_a));
    audit(cross <= std::max(patched, budget), "cross-edge budget exceeded");
    return g;
}

Graph gen_bipartite_like(int n, const Frac& gamma, uint64_t seed, int imbalance) {
    require(n >= 8, "n must be at least 8");
    require(gamma.num >= 0 && gamma < Frac(1, 10), "gamma must lie in [0, 0.1)");
    if (imbalance < 0) imbalance = n % 2;
    require((n - imbalance) % 2 == 0, "n and imbalance must have equal parity");
    int na = (n - imbalance) / 2, nb = n - na;
    require(na >= 2, "imbalance leaves the small side too small");

    std::set<Edge> es;
    for (int u = 0; u < na; ++u)
        for (int v = na; v < n; ++v) es.emplace(u, v);

    long long deficit = floor_half_up(n) - na;  // big-side vertices lack this much
    long long patched = 0;
    if (deficit > 0) {
        int half = static_cast<int>((deficit + 1) / 2);
        require(2 * half < nb, "big side too small for its Dirac patch");
        for (const Edge& e : circulant_edges(na, nb, half)) es.insert(e), ++patched;
    }
    long long budget = gamma.floor_mul(static_cast<long long>(n) * n);
    std::vector<Edge> pool;
    for (int u = 0; u < na; ++u)
        for (int v = u + 1; v < na; ++v) pool.emplace_back(u, v);
    for (int u = na; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!es.count(Edge(u, v))) pool.emplace_back(u, v);
    Rng rng(seed);
    add_seeded(es, pool, budget - patched, rng);

    Graph g = finish(n, es);
    audit(is_dirac(g), "bipartite instance is not Dirac");
    std::vector<int> side_a(na);
    std::iota(side_a.begin(), side_a.end(), 0);
    std::vector<char> ma = g.mask_of(side_a);
    long long inside = g.edges_inside(ma) +
                       g.edges_inside(g.mask_of(g.complement_of(side_a)));
    audit(inside <= std::max(patched, budget), "inside-edge budget exceeded");
    return g;
}

Graph gen_random_dirac(int n, const Frac& p, uint64_t seed) {
    require(n >= 3, "n must be at least 3");
    require(Frac(1, 2) < p && p <= Frac::of(1), "p must lie in (1/2, 1]");
    Rng rng(seed);
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    std::vector<int> deg(n, 0);
    auto connect = [&](int u, int v) {
        adj[static_cast<size_t>(u) * n + v] = adj[static_cast<size_t>(v) * n + u] = 1;
        ++deg[u];
        ++deg[v];
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<long long>(rng.below(static_cast<uint64_t>(p.den))) < p.num)
                connect(u, v);

    long long need = floor_half_up(n);
    for (int round = 0; round < 200; ++round) {
        int worst = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < need && (worst < 0 || deg[v] < deg[worst])) worst = v;
        if (worst < 0) break;
        int pick = -1;
        for (int u = 0; u < n; ++u) {
            if (u == worst || adj[static_cast<size_t>(worst) * n + u]) continue;
            if (pick < 0 || deg[u] < deg[pick]) pick = u;
        }
        if (pick < 0) throw GenerationError("deficient vertex has no non-neighbour");
        connect(worst, pick);
    }
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[static_cast<size_t>(u) * n + v]) es.emplace_back(u, v);
    Graph g(n, es);
    if (!is_dirac(g)) throw GenerationError("patch budget exhausted before Dirac bound");
    return g;
}

Colouring gen_colouring(const Graph& g, ColourScheme scheme, const Frac& mu, uint64_t seed) {
    int m = g.m();
    std::vector<int> colours(m, 0);
    switch (scheme) {
        case ColourScheme::Rainbow: {
            std::iota(colours.begin(), colours.end(), 0);
            break;
        }
        case ColourScheme::Bounded: {
            long long cap = mu.floor_mul(g.n());
            require(cap >= 1, "floor(mu*n) must be at least 1");
            std::vector<int> order(m);
            std::iota(order.begin(), order.end(), 0);
            Rng rng(seed);
            rng.shuffle(order);
            for (int i = 0; i < m; ++i)
                colours[order[i]] = static_cast<int>(i / cap);
            break;
        }
        case ColourScheme::Proper: {
            const auto& es = g.edges();
            std::vector<std::set<int>> at(g.n());
            for (int i = 0; i < m; ++i) {
                int t = 0;
                while (at[es[i].u].count(t) || at[es[i].v].count(t)) ++t;
                colours[i] = t;
                at[es[i].u].insert(t);
                at[es[i].v].insert(t);
            }
            break;
        }
    }
    Colouring c(g, colours);
    if (scheme == ColourScheme::Bounded)
        audit(c.is_k_bounded(mu.floor_mul(g.n())), "bounded colouring exceeds its cap");
    if (scheme == ColourScheme::Rainbow)
        audit(c.max_multiplicity() <= 1, "rainbow colouring repeats a colour");
    if (scheme == ColourScheme::Proper) {
        std::vector<std::set<int>> seen(g.n());
        for (const Edge& e : g.edges()) {
            int t = c.colour(e);
            audit(seen[e.u].insert(t).second && seen[e.v].insert(t).second,
                  "proper colouring repeats a colour at a vertex");
        }
    }
    return c;
}

LatinInstance gen_latin_colouring(int n, uint64_t seed) {
    require(n >= 2, "n must be at least 2");
    std::vector<int> sigma(n), tau(n), rho(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::iota(tau.begin(), tau.end(), 0);
    std::iota(rho.begin(), rho.end(), 0);
    Rng(derive_seed(seed, 1)).shuffle(sigma);
    Rng(derive_seed(seed, 2)).shuffle(tau);
    Rng(derive_seed(seed, 3)).shuffle(rho);

    std::vector<Edge> es;
    std::vector<int> colours;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            es.emplace_back(i, n + j);
            colours.push_back(rho[(sigma[i] + tau[j]) % n]);
        }
    std::sort(es.begin(), es.end());   // already sorted by construction, keep explicit
    Graph g(2 * n, es);
    Colouring c(g, colours);
    audit(c.num_colours() == n, "latin colouring must use exactly n colours");
    for (const auto& [t, mult] : c.multiplicities())
        audit(mult == n, "latin colour classes must be perfect matchings");
    return LatinInstance{std::move(g), std::move(c)};
}

const char* to_string(Family f) {
    switch (f) {
        case Family::RandomDirac: return "random_dirac";
        case Family::TwoCliqueLike: return "two_clique_like";
        case Family::BipartiteLike: return "bipartite_like";
        case Family::Counterexample: return "counterexample";
        default: return "latin_square";
    }
}

std::optional<Family> family_from_string(const std::string& s) {
    for (Family f : {Family::RandomDirac, Family::TwoCliqueLike, Family::BipartiteLike,
                     Family::Counterexample, Family::LatinSquare})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

Instance realize(const GenSpec& spec) {
    std::string label = std::string(to_string(spec.family)) + "-n" + std::to_string(spec.n);
    switch (spec.family) {
        case Family::RandomDirac:
            return Instance{gen_random_dirac(spec.n, spec.p, spec.seed), std::nullopt, label};
        case Family::TwoCliqueLike:
            return Instance{gen_two_clique_like(spec.n, spec.gamma, spec.seed), std::nullopt,
                            label};
        case Family::BipartiteLike:
            return Instance{gen_bipartite_like(spec.n, spec.gamma, spec.seed, spec.imbalance),
                            std::nullopt, label};
        case Family::Counterexample: {
            Counterexample ce = gen_counterexample(spec.n, spec.k);
            return Instance{std::move(ce.g), std::move(ce.c),
                            label + "-k" + std::to_string(spec.k)};
        }
        default: {
            LatinInstance li = gen_latin_colouring(spec.n, spec.seed);
            return Instance{std::move(li.g), std::move(li.c), label};
        }
    }
}

}  // namespace rainbow
