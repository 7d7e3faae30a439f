#include "rainbow/classification.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

void check_unit(const Frac& f, const char* name) {
    if (f.num <= 0 || !(f < Frac::of(1)))
        throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
}

std::vector<int> checked_side(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("side vertex out of range");
        if (seen[v]) throw std::invalid_argument("side repeats a vertex");
        seen[v] = 1;
    }
    std::vector<int> out = verts;
    std::sort(out.begin(), out.end());
    return out;
}

// 64-bit-word adjacency rows for fast |N(v) ∩ X| counts
struct BitRows {
    int n, words;
    std::vector<uint64_t> rows;

    explicit BitRows(const Graph& g) : n(g.n()), words((g.n() + 63) / 64) {
        rows.assign(static_cast<size_t>(n) * words, 0);
        for (const Edge& e : g.edges()) {
            rows[static_cast<size_t>(e.u) * words + e.v / 64] |= 1ULL << (e.v % 64);
            rows[static_cast<size_t>(e.v) * words + e.u / 64] |= 1ULL << (e.u % 64);
        }
    }

    int count_in(int v, const std::vector<uint64_t>& set_words) const {
        const uint64_t* row = &rows[static_cast<size_t>(v) * words];
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(row[w] & set_words[w]);
        return c;
    }
};

}  // namespace

void Params::validate() const {
    check_unit(nu, "nu");
    check_unit(tau, "tau");
    check_unit(gamma, "gamma");
    check_unit(eps, "eps");
    check_unit(alpha, "alpha");
    check_unit(eta, "eta");
    if (tau < nu) throw std::invalid_argument("nu must not exceed tau");
}

const char* to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::CloseToBipartite: return "close-to-bipartite";
        case StructureTag::CloseToTwoCliques: return "close-to-two-cliques";
        case StructureTag::RobustExpander: return "robust-expander";
        default: return "unclassified";
    }
}

std::vector<int> robust_neighbourhood(const Graph& g, const std::vector<int>& x_set,
                                      const Frac& nu) {
    check_unit(nu, "nu");
    std::vector<int> xs = checked_side(g, x_set);
    std::vector<char> mask = g.mask_of(xs);
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (nu.ge_mul(g.degree_in(v, mask), g.n())) out.push_back(v);
    return out;
}

ExpanderReport robust_expander_exhaustive(const Graph& g, const Frac& nu, const Frac& tau) {
    check_unit(nu, "nu");
    check_unit(tau, "tau");
    int n = g.n();
    if (n > 20)
        throw std::invalid_argument("exhaustive expander test is limited to 20 vertices");
    long long thr = nu.ceil_mul(n);              // integer count >= nu*n
    int lo = static_cast<int>(tau.ceil_mul(n));
    int hi = static_cast<int>((Frac::of(1) - tau).floor_mul(n));
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    ExpanderReport rep;
    rep.exhaustive = true;
    for (uint32_t x = 1; x < (1u << n); ++x) {
        int size = std::popcount(x);
        if (size < lo || size > hi) continue;
        ++rep.sets_tested;
        int rn = 0;
        for (int v = 0; v < n; ++v)
            if (std::popcount(adj[v] & x) >= thr) ++rn;
        if (!nu.ge_mul(rn - size, n)) {          // need |RN| - |X| >= nu*n
            std::vector<int> witness;
            for (int v = 0; v < n; ++v)
                if (x & (1u << v)) witness.push_back(v);
            rep.violation = std::move(witness);
            return rep;
        }
    }
    rep.expands = true;
    return rep;
}

ExpanderReport robust_expander_sampled(const Graph& g, const Frac& nu, const Frac& tau,
                                       long long trials, uint64_t seed) {
    check_unit(nu, "nu");
    check_unit(tau, "tau");
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    int n = g.n();
    long long thr = nu.ceil_mul(n);
    int lo = static_cast<int>(tau.ceil_mul(n));
    int hi = static_cast<int>((Frac::of(1) - tau).floor_mul(n));
    ExpanderReport rep;
    if (lo > hi) {                                // no X sizes to test
        rep.expands = true;
        return rep;
    }
    BitRows rows(g);
    Rng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint64_t> set_words(rows.words);
    for (long long t = 0; t < trials; ++t) {
        int size = lo + rng.below_int(hi - lo + 1);
        rng.shuffle(perm);
        std::fill(set_words.begin(), set_words.end(), 0);
        for (int i = 0; i < size; ++i) set_words[perm[i] / 64] |= 1ULL << (perm[i] % 64);
        ++rep.sets_tested;
        int rn = 0;
        for (int v = 0; v < n; ++v)
            if (rows.count_in(v, set_words) >= thr) ++rn;
        if (!nu.ge_mul(rn - size, n)) {
            std::vector<int> witness(perm.begin(), perm.begin() + size);
            std::sort(witness.begin(), witness.end());
            rep.violation = std::move(witness);
            return rep;
        }
    }
    rep.expands = true;
    return rep;
}

namespace {

long long closeness_value(const Graph& g, ClosenessTarget target,
                          const std::vector<char>& mask) {
    return target == ClosenessTarget::Bipartite ? g.edges_inside(mask) : g.edges_across(mask);
}

}  // namespace

ClosenessResult closeness_exact(const Graph& g, ClosenessTarget target) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("closeness needs at least 4 vertices");
    if (n > 20) throw std::invalid_argument("exact closeness is limited to 20 vertices");
    int h = n / 2;
    std::vector<char> mask(n, 0);
    long long best = -1;
    uint32_t best_set = 0;
    // Gosper's hack: ascending walk over all h-subsets of {0..n-1}
    for (uint32_t x = (1u << h) - 1; x < (1u << n);) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v = 0; v < n; ++v)
            if (x & (1u << v)) mask[v] = 1;
        long long val = closeness_value(g, target, mask);
        if (best < 0 || val < best) {
            best = val;
            best_set = x;
        }
        uint32_t c = x & -x, r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    ClosenessResult res;
    res.gamma_best = Frac(best, static_cast<long long>(n) * n);
    for (int v = 0; v < n; ++v)
        if (best_set & (1u << v)) res.witness.push_back(v);
    return res;
}

ClosenessResult closeness_local(const Graph& g, ClosenessTarget target, uint64_t seed,
                                int restarts) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("closeness needs at least 4 vertices");
    if (restarts < 1) throw std::invalid_argument("restarts must be positive");
    int h = n / 2;
    bool bip = target == ClosenessTarget::Bipartite;

    long long best = -1;
    std::vector<int> best_set;
    std::vector<int> perm(n);
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(r)));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<char> in_a(n, 0);
        for (int i = 0; i < h; ++i) in_a[perm[i]] = 1;
        std::vector<long long> din(n, 0);   // d(v, A)
        for (const Edge& e : g.edges()) {
            if (in_a[e.u]) ++din[e.v];
            if (in_a[e.v]) ++din[e.u];
        }
        long long inside = 0, deg_sum = 0;
        for (int v = 0; v < n; ++v)
            if (in_a[v]) {
                inside += din[v];
                deg_sum += g.degree(v);
            }
        inside /= 2;
        long long obj = bip ? inside : deg_sum - 2 * inside;

        for (long long step = 0; step < 8LL * n; ++step) {
            long long best_delta = 0;
            int bv = -1, bw = -1;
            for (int v = 0; v < n; ++v) {
                if (!in_a[v]) continue;
                for (int w = 0; w < n; ++w) {
                    if (in_a[w]) continue;
                    long long de = din[w] - din[v] - (g.has_edge(v, w) ? 1 : 0);
                    long long delta = bip ? de : (g.degree(w) - g.degree(v)) - 2 * de;
                    if (delta < best_delta) {
                        best_delta = delta;
                        bv = v;
                        bw = w;
                    }
                }
            }
            if (bv < 0) break;
            in_a[bv] = 0;
            in_a[bw] = 1;
            for (int u : g.neighbours(bv)) --din[u];
            for (int u : g.neighbours(bw)) ++din[u];
            obj += best_delta;
        }
        if (best < 0 || obj < best) {
            best = obj;
            best_set.clear();
            for (int v = 0; v < n; ++v)
                if (in_a[v]) best_set.push_back(v);
        }
    }
    return ClosenessResult{Frac(best, static_cast<long long>(n) * n), best_set};
}

ClosenessResult closeness(const Graph& g, ClosenessTarget target, uint64_t seed, int restarts) {
    if (g.n() <= 20) return closeness_exact(g, target);
    return closeness_local(g, target, seed, restarts);
}

Classification classify(const Graph& g, const Params& p, uint64_t seed,
                        const ClassifyOptions& opt) {
    p.validate();
    Classification out;
    if (g.n() < 4) return out;

    ClosenessResult tc = closeness(g, ClosenessTarget::TwoCliques, derive_seed(seed, 1),
                                   opt.restarts);
    if (tc.gamma_best <= p.gamma) {
        out.tag = StructureTag::CloseToTwoCliques;
        out.partition = std::move(tc.witness);
        out.gamma_best = tc.gamma_best;
        return out;
    }
    ClosenessResult bip = closeness(g, ClosenessTarget::Bipartite, derive_seed(seed, 2),
                                    opt.restarts);
    if (bip.gamma_best <= p.gamma) {
        out.tag = StructureTag::CloseToBipartite;
        out.partition = std::move(bip.witness);
        out.gamma_best = bip.gamma_best;
        return out;
    }
    ExpanderReport rep = robust_expander_sampled(g, p.nu, p.tau, opt.trials,
                                                 derive_seed(seed, 3));
    out.certificate = rep;
    out.tag = rep.expands ? StructureTag::RobustExpander : StructureTag::Unclassified;
    return out;
}

namespace {

// smallest t such that all but t*n vertices clear the (1/2 - t)*n bar:
// allowing the k smallest degrees as exceptions needs t >= k/n and
// t >= 1/2 - d_(k+1)/n, both monotone in opposite directions
Frac deficit_scan(const std::vector<int>& degs_sorted, int n) {
    Frac best = Frac::of(1);
    int p = static_cast<int>(degs_sorted.size());
    for (int k = 0; k <= p; ++k) {
        Frac slack = Frac::of(0);
        if (k < p) {
            long long miss = n - 2LL * degs_sorted[k];
            if (miss > 0) slack = Frac(miss, 2LL * n);
        }
        best = frac_min(best, frac_max(slack, Frac(k, n)));
    }
    return best;
}

Frac quarter_deficit(int min_deg, int n) {
    long long miss = n - 4LL * min_deg;
    return miss > 0 ? Frac(miss, 4LL * n) : Frac::of(0);
}

struct SideDegrees {
    std::vector<int> inside_sorted;   // d(v, own side), ascending
    std::vector<int> cross_sorted;    // d(v, other side), ascending
    int min_inside = 0, min_cross = 0;
};

SideDegrees side_degrees(const Graph& g, const std::vector<int>& side,
                         const std::vector<char>& own, const std::vector<char>& other) {
    SideDegrees d;
    for (int v : side) {
        d.inside_sorted.push_back(g.degree_in(v, own));
        d.cross_sorted.push_back(g.degree_in(v, other));
    }
    std::sort(d.inside_sorted.begin(), d.inside_sorted.end());
    std::sort(d.cross_sorted.begin(), d.cross_sorted.end());
    d.min_inside = d.inside_sorted.empty() ? 0 : d.inside_sorted.front();
    d.min_cross = d.cross_sorted.empty() ? 0 : d.cross_sorted.front();
    return d;
}

bool budgeted_degree_bound(const Graph& g, const std::vector<int>& side,
                           const std::vector<char>& towards, const Frac& bound_slack,
                           const Frac& budget, int n) {
    Frac thr = Frac(1, 2) - bound_slack;
    long long exceptions = 0;
    for (int v : side)
        if (!thr.ge_mul(g.degree_in(v, towards), n)) ++exceptions;
    return budget.le_mul(exceptions, n);
}

}  // namespace

bool two_clique_properties_hold(const Graph& g, const std::vector<int>& a,
                                const std::vector<int>& b, const Frac& eps) {
    int n = g.n();
    std::vector<char> ma = g.mask_of(a), mb = g.mask_of(b);
    long long diff = std::llabs(static_cast<long long>(a.size()) -
                                static_cast<long long>(b.size()));
    if (!eps.le_mul(diff, n)) return false;
    Frac quarter = Frac(1, 4) - eps;
    for (int v : a)
        if (!quarter.ge_mul(g.degree_in(v, ma), n)) return false;
    for (int v : b)
        if (!quarter.ge_mul(g.degree_in(v, mb), n)) return false;
    return budgeted_degree_bound(g, a, ma, eps, eps, n) &&
           budgeted_degree_bound(g, b, mb, eps, eps, n);
}

bool biclique_properties_hold(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b, const Frac& alpha, const Frac& eps,
                              const Frac& nu) {
    int n = g.n();
    long long imbalance = static_cast<long long>(b.size()) - static_cast<long long>(a.size());
    if (imbalance < 0 || !alpha.le_mul(imbalance, n)) return false;
    std::vector<char> ma = g.mask_of(a), mb = g.mask_of(b);
    for (int v : a)
        if (!nu.ge_mul(g.degree_in(v, mb), n)) return false;
    Frac quarter = Frac(1, 4) - eps;
    for (int v : b)
        if (!quarter.ge_mul(g.degree_in(v, ma), n)) return false;
    if (static_cast<int>(a.size()) != n / 2) {
        Frac two_nu = nu + nu;
        for (int v : b)
            if (!two_nu.le_mul(g.degree_in(v, mb), n)) return false;
    }
    return budgeted_degree_bound(g, a, mb, eps, alpha, n) &&
           budgeted_degree_bound(g, b, ma, eps, alpha, n);
}

TwoCliquePartition repair_two_clique(const Graph& g, const std::vector<int>& a0) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("partition repair needs at least 4 vertices");
    std::vector<int> sa0 = checked_side(g, a0);
    if (sa0.empty() || static_cast<int>(sa0.size()) == n)
        throw std::invalid_argument("side must be a proper nonempty subset");
    std::vector<char> m0 = g.mask_of(sa0);
    if (!Frac(1, 10).le_mul(g.edges_across(m0), static_cast<long long>(n) * n))
        throw RepairError("too many edges leave the given side: not a two-clique shape");

    std::vector<int> b0 = g.complement_of(sa0);
    std::vector<char> mb0 = g.mask_of(b0);
    Frac quarter(1, 4);
    std::vector<int> a, b;
    for (int v : sa0)
        (quarter.le_mul(g.degree_in(v, m0), n) ? b : a).push_back(v);
    for (int v : b0)
        (quarter.le_mul(g.degree_in(v, mb0), n) ? a : b).push_back(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.empty() || b.empty()) throw RepairError("repair emptied one side of the partition");

    std::vector<char> ma = g.mask_of(a), mb = g.mask_of(b);
    SideDegrees da = side_degrees(g, a, ma, mb), db = side_degrees(g, b, mb, ma);
    Frac eps = Frac(std::llabs(static_cast<long long>(a.size()) -
                               static_cast<long long>(b.size())), n);
    eps = frac_max(eps, quarter_deficit(da.min_inside, n));
    eps = frac_max(eps, quarter_deficit(db.min_inside, n));
    eps = frac_max(eps, deficit_scan(da.inside_sorted, n));
    eps = frac_max(eps, deficit_scan(db.inside_sorted, n));
    if (eps > Frac(1, 4))
        throw RepairError("no split parameter up to 1/4 certifies the repaired partition");
    if (g.edges_between(ma, mb) == 0)
        throw RepairError("repaired sides are disconnected from each other");
    if (!two_clique_properties_hold(g, a, b, eps))
        throw std::logic_error("certified split parameter failed re-verification");

    TwoCliquePartition out;
    out.a = std::move(a);
    out.b = std::move(b);
    out.eps = eps;
    out.min_cross_a = da.min_cross;
    out.min_cross_b = db.min_cross;
    return out;
}

BicliquePartition repair_biclique(const Graph& g, const std::vector<int>& a0, const Frac& nu,
                                  const Frac& gamma) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("partition repair needs at least 4 vertices");
    check_unit(nu, "nu");
    check_unit(gamma, "gamma");
    std::vector<int> sa0 = checked_side(g, a0);
    if (sa0.empty() || static_cast<int>(sa0.size()) == n)
        throw std::invalid_argument("side must be a proper nonempty subset");
    std::vector<char> m0 = g.mask_of(sa0);
    if (!Frac(1, 10).le_mul(g.edges_inside(m0), static_cast<long long>(n) * n))
        throw RepairError("too many edges inside the given side: not a bipartite shape");

    std::vector<int> b0 = g.complement_of(sa0);
    std::vector<char> mb0 = g.mask_of(b0);
    Frac cross_bar = Frac(1, 4) - gamma;
    std::vector<int> a1, b1;
    for (int v : sa0)
        (cross_bar.le_mul(g.degree_in(v, mb0), n) ? b1 : a1).push_back(v);
    for (int v : b0)
        (cross_bar.le_mul(g.degree_in(v, m0), n) ? a1 : b1).push_back(v);
    if (b1.size() < a1.size()) std::swap(a1, b1);
    std::sort(a1.begin(), a1.end());
    std::sort(b1.begin(), b1.end());

    // move low-imbalance-many high-internal-degree vertices over from B
    std::vector<char> mb1 = g.mask_of(b1);
    Frac two_nu = nu + nu;
    std::vector<int> heavy;
    for (int v : b1)
        if (two_nu.ge_mul(g.degree_in(v, mb1), n)) heavy.push_back(v);
    size_t moves = std::min(heavy.size(), (b1.size() - a1.size()) / 2);
    std::vector<char> moved(n, 0);
    for (size_t i = 0; i < moves; ++i) moved[heavy[i]] = 1;
    std::vector<int> a = a1, b;
    for (int v : b1) (moved[v] ? a : b).push_back(v);
    std::sort(a.begin(), a.end());
    if (a.empty() || b.empty()) throw RepairError("repair emptied one side of the partition");

    std::vector<char> ma = g.mask_of(a), mb = g.mask_of(b);
    SideDegrees da = side_degrees(g, a, ma, mb), db = side_degrees(g, b, mb, ma);
    for (int v : a)
        if (!nu.ge_mul(g.degree_in(v, mb), n))
            throw RepairError("a vertex has fewer than nu*n neighbours across the split");
    if (static_cast<int>(a.size()) != n / 2)
        for (int v : b)
            if (!two_nu.le_mul(g.degree_in(v, mb), n))
                throw RepairError("a vertex keeps more than 2*nu*n neighbours inside the "
                                  "larger side");

    Frac t = Frac(static_cast<long long>(b.size()) - static_cast<long long>(a.size()), n);
    t = frac_max(t, quarter_deficit(db.min_cross, n));
    t = frac_max(t, deficit_scan(da.cross_sorted, n));
    t = frac_max(t, deficit_scan(db.cross_sorted, n));
    if (t > Frac(1, 5))
        throw RepairError("no split parameter up to 1/5 certifies the repaired partition");
    if (!biclique_properties_hold(g, a, b, t, t, nu))
        throw std::logic_error("certified split parameter failed re-verification");

    BicliquePartition out;
    out.a = std::move(a);
    out.b = std::move(b);
    out.alpha = t;
    out.eps = t;
    out.nu = nu;
    return out;
}

}  // namespace rainbow
