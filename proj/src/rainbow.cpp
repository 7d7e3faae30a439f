#include "rainbow/rainbow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rainbow/rng.hpp"
#include "rainbow/switching.hpp"

namespace rainbow {

void ColourMultisetFamily::validate() const {
    if (n <= 0) throw std::invalid_argument("family scale n must be positive");
    if (a <= 0 || b <= 0 || b > a)
        throw std::invalid_argument("group size a and demand b need 0 < b <= a");
    if (mu.num <= 0 || nu_frac.num <= 0 || eta.num <= 0)
        throw std::invalid_argument("mu, nu and eta must be positive");
    std::set<int> seen;
    for (const auto& grp : groups) {
        if (static_cast<int>(grp.size()) != a)
            throw std::invalid_argument("every group must have exactly a colours");
        for (int t : grp)
            if (!seen.insert(t).second)
                throw std::invalid_argument("groups must be pairwise disjoint");
    }
    std::map<int, long long> total;
    for (const auto& ci : sets) {
        long long sz = static_cast<long long>(ci.size());
        if (!nu_frac.ge_mul(sz, n) || sz > n)
            throw std::invalid_argument("every set size must lie in [nu*n, n]");
        for (int t : ci) ++total[t];
    }
    for (const auto& [t, cnt] : total)
        if (!mu.le_mul(cnt, n))
            throw std::invalid_argument("a colour exceeds its mu*n multiplicity cap");
}

void SearchConfig::validate() const {
    if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
    if (restarts <= 0) throw std::invalid_argument("restarts must be positive");
    ham_budget.validate();
}

std::vector<ConflictPair> conflict_pairs(const Colouring& c, const DirectedHamCycle& h) {
    std::vector<Edge> edges = h.edge_set();
    std::map<int, std::vector<Edge>> by_colour;
    for (const Edge& e : edges) by_colour[c.colour(e)].push_back(e);
    std::vector<ConflictPair> out;
    for (const auto& [t, es] : by_colour)
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                out.push_back(ConflictPair{es[i], es[j]});
    return out;
}

ProtectedSet greedy_rainbow_matching(const Graph& g, const Colouring& c,
                                     const std::vector<int>& inside, int target) {
    std::vector<char> mask = g.mask_of(inside);
    std::vector<char> used(g.n(), 0);
    std::set<int> used_colours;
    std::vector<Edge> picked;
    for (const Edge& e : g.edges()) {
        if (target > 0 && static_cast<int>(picked.size()) >= target) break;
        if (!mask[e.u] || !mask[e.v] || used[e.u] || used[e.v]) continue;
        if (!c.has(e.u, e.v)) continue;
        int t = c.colour(e);
        if (used_colours.count(t)) continue;
        picked.push_back(e);
        used[e.u] = used[e.v] = 1;
        used_colours.insert(t);
    }
    return ProtectedSet(picked, true);
}

namespace {

struct Stratum {
    int set_index = 0;
    int level = 0;                 // j: colours with mult in (mu*n/2^j, mu*n/2^(j-1)]
    long long support_size = 0;    // over all colours, not just selectable ones
    std::vector<int> selectable;   // support ∩ U
    bool dense = false;
};

bool bernoulli(Rng& rng, const Frac& p) {
    return static_cast<long long>(rng.below(static_cast<uint64_t>(p.den))) < p.num;
}

}  // namespace

std::vector<int> select_colour_set(const ColourMultisetFamily& fam, uint64_t seed) {
    fam.validate();
    if (fam.groups.empty()) return {};
    int n = fam.n;

    std::vector<int> universe;
    std::map<int, int> group_of;
    for (size_t k = 0; k < fam.groups.size(); ++k)
        for (int t : fam.groups[k]) {
            universe.push_back(t);
            group_of[t] = static_cast<int>(k);
        }
    std::sort(universe.begin(), universe.end());

    // dyadic multiplicity strata of each set, levels 1..s with 2^s >= mu*n
    Frac mn(fam.mu.num * static_cast<long long>(n), fam.mu.den);
    int s = 1;
    while (s < 62 && Frac::of(1LL << s) < mn) ++s;
    std::vector<Stratum> strata;
    for (size_t i = 0; i < fam.sets.size(); ++i) {
        std::map<int, long long> mult;
        for (int t : fam.sets[i]) ++mult[t];
        std::map<int, Stratum> by_level;
        for (const auto& [t, cnt] : mult) {
            int j = 1;
            while (j < s && mn > Frac::of(cnt * (1LL << j))) ++j;  // smallest j with mu*n <= cnt*2^j
            Stratum& st = by_level[j];
            st.set_index = static_cast<int>(i);
            st.level = j;
            ++st.support_size;
            if (group_of.count(t)) st.selectable.push_back(t);
        }
        for (auto& [j, st] : by_level) {
            // dense: support_size >= 2^((j-1)/2) / sqrt(mu), compared squared
            __int128 lhs = static_cast<__int128>(st.support_size) * st.support_size * fam.mu.num;
            __int128 rhs = static_cast<__int128>(fam.mu.den) * (1LL << (j - 1));
            st.dense = lhs >= rhs;
            if (st.dense && !st.selectable.empty()) strata.push_back(std::move(st));
        }
    }

    Frac delta0 = frac_min(fam.eta * Frac(1, 8),
                           Frac(1, 2LL * fam.a * fam.b));
    if (delta0.num <= 0) delta0 = Frac(1, 2LL * fam.a * fam.b);

    for (int retry = 0; retry <= 8; ++retry) {
        Frac delta = delta0;
        for (int d = 0; d < retry; ++d) delta = frac_min(Frac(1, 2), delta + delta);
        Frac two_delta = delta + delta;
        Rng rng(derive_seed(seed, static_cast<uint64_t>(retry)));

        std::map<int, char> in_s;
        for (int t : universe) in_s[t] = bernoulli(rng, delta);

        long long rounds_cap = 2000 + 200LL * (static_cast<long long>(fam.groups.size()) +
                                               static_cast<long long>(strata.size()));
        bool settled = false;
        for (long long round = 0; round < rounds_cap; ++round) {
            const std::vector<int>* support = nullptr;
            // first violated event in fixed order: group deficits, then
            // over-activated dense strata
            for (const auto& grp : fam.groups) {
                int hit = 0;
                for (int t : grp) hit += in_s[t];
                if (hit < fam.b) {
                    support = &grp;
                    break;
                }
            }
            if (!support) {
                for (const auto& st : strata) {
                    long long hit = 0;
                    for (int t : st.selectable) hit += in_s[t];
                    if (two_delta.ge_mul(hit, st.support_size)) {
                        support = &st.selectable;
                        break;
                    }
                }
            }
            if (!support) {
                settled = true;
                break;
            }
            for (int t : *support) in_s[t] = bernoulli(rng, delta);
        }
        if (!settled) continue;

        // keep only the b smallest sampled colours of each group
        std::vector<int> t_set;
        for (const auto& grp : fam.groups) {
            std::vector<int> hits;
            for (int t : grp)
                if (in_s[t]) hits.push_back(t);
            std::sort(hits.begin(), hits.end());
            hits.resize(std::min<size_t>(hits.size(), fam.b));
            t_set.insert(t_set.end(), hits.begin(), hits.end());
        }
        std::sort(t_set.begin(), t_set.end());

        // direct verification of both guarantees; the sampling is not trusted
        bool ok = true;
        for (const auto& grp : fam.groups) {
            int hit = 0;
            for (int t : grp)
                hit += std::binary_search(t_set.begin(), t_set.end(), t) ? 1 : 0;
            if (hit < fam.b) ok = false;
        }
        for (const auto& ci : fam.sets) {
            if (!ok) break;
            long long removed = 0;
            for (int t : ci)
                if (std::binary_search(t_set.begin(), t_set.end(), t)) ++removed;
            if (!fam.eta.le_mul(removed, static_cast<long long>(ci.size()))) ok = false;
        }
        if (ok) return t_set;
    }
    throw SelectionError("no verified colour set within the retry budget");
}

namespace {

Frac half_minus(const Frac& x) { return Frac(1, 2) - x; }

void structural(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(std::string("protected-set construction check failed: ") + msg);
}

ProtectedChoice two_clique_choice(const Graph& g, const Colouring& c,
                                  const TwoCliquePartition& part) {
    std::vector<char> ma = g.mask_of(part.a);
    std::vector<Edge> cross;
    for (const Edge& e : g.edges())
        if (ma[e.u] != ma[e.v]) cross.push_back(e);

    std::optional<std::pair<Edge, Edge>> pick;
    for (size_t i = 0; i < cross.size() && !pick; ++i)
        for (size_t j = i + 1; j < cross.size() && !pick; ++j) {
            const Edge &e = cross[i], &f = cross[j];
            bool disjoint = e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v;
            if (disjoint && c.colour(e) != c.colour(f)) pick = {e, f};
        }
    if (!pick)
        throw ConstructionError(
            "no two vertex-disjoint cross edges with distinct colours to protect");

    ProtectedSet z({pick->first, pick->second}, true);
    std::set<int> z_colours{c.colour(pick->first), c.colour(pick->second)};
    Graph reduced = g.filtered([&](const Edge& e) {
        if (z.contains(e)) return true;
        if (ma[e.u] != ma[e.v]) return false;              // cross edges go
        return !z_colours.count(c.colour(e));              // colour-sharing edges go
    });
    Colouring rc = c.restricted_to(reduced);

    long long across = 0;
    for (const Edge& e : reduced.edges())
        if (ma[e.u] != ma[e.v]) {
            structural(z.contains(e), "an unprotected cross edge survived");
            ++across;
        }
    structural(across == 2, "the reduced graph must keep exactly the two protected edges");
    for (int t : z_colours)
        structural(rc.multiplicity(t) == 1, "a protected colour is still repeated");

    ProtectedChoice out{std::move(z), std::move(reduced), std::move(rc),
                        "two cross edges protected"};
    return out;
}

ProtectedChoice biclique_choice(const Graph& g, const Colouring& c,
                                const BicliquePartition& part, const Params& p,
                                uint64_t seed) {
    int n = g.n();
    std::vector<char> ma = g.mask_of(part.a), mb = g.mask_of(part.b);
    long long m = static_cast<long long>(part.b.size()) -
                  static_cast<long long>(part.a.size());

    std::vector<Edge> matching;
    std::set<int> t_set;
    if (m > 0) {
        ProtectedSet m0 = greedy_rainbow_matching(g, c, part.b, 0);
        if (static_cast<long long>(m0.size()) < m)
            throw SelectionError("rainbow matching inside the larger side is smaller than "
                                 "the side imbalance");
        std::vector<int> colours;
        for (const Edge& e : m0.edges()) colours.push_back(c.colour(e));
        std::sort(colours.begin(), colours.end());
        long long a = static_cast<long long>(colours.size()) / m;
        colours.resize(a * m);

        ColourMultisetFamily fam;
        fam.n = n;
        fam.a = static_cast<int>(a);
        fam.b = 1;
        fam.eta = p.eta * Frac(1, 2);
        for (long long k = 0; k < m; ++k)
            fam.groups.emplace_back(colours.begin() + k * a, colours.begin() + (k + 1) * a);
        long long min_cross = n;
        std::map<int, long long> totals;
        for (int v = 0; v < n; ++v) {
            std::vector<int> cv;
            const std::vector<char>& other = ma[v] ? mb : ma;
            for (int w : g.neighbours(v))
                if (other[w]) {
                    cv.push_back(c.colour(Edge(v, w)));
                    ++totals[cv.back()];
                }
            min_cross = std::min(min_cross, static_cast<long long>(cv.size()));
            fam.sets.push_back(std::move(cv));
        }
        if (min_cross <= 0)
            throw ConstructionError("a vertex has no edges across the split");
        long long max_total = 1;
        for (const auto& [t, cnt] : totals) max_total = std::max(max_total, cnt);
        fam.nu_frac = Frac(min_cross, n);
        fam.mu = Frac(max_total, n);

        std::vector<int> chosen = select_colour_set(fam, derive_seed(seed, 1));
        t_set.insert(chosen.begin(), chosen.end());
        for (const Edge& e : m0.edges())
            if (t_set.count(c.colour(e))) matching.push_back(e);
        structural(static_cast<long long>(matching.size()) == m,
                   "selected colours must name exactly one matching edge each");
    }

    ProtectedSet z(matching, true);
    Graph stage1 = g.filtered([&](const Edge& e) {
        if (z.contains(e)) return true;
        if (ma[e.u] == ma[e.v]) return false;              // inside edges go
        return !t_set.count(c.colour(e));                  // selected colours go
    });
    Frac low = half_minus(p.eta);
    std::vector<long long> deg(n, 0);
    for (const Edge& e : stage1.edges()) ++deg[e.u], ++deg[e.v];
    Graph reduced = stage1.filtered([&](const Edge& e) {
        if (z.contains(e)) return true;
        return !(low.le_mul(deg[e.u], n) && low.le_mul(deg[e.v], n));
    });
    Colouring rc = c.restricted_to(reduced);

    structural(reduced.edges_inside(ma) == 0, "edges survived inside the small side");
    long long inside_b = 0;
    for (const Edge& e : reduced.edges())
        if (mb[e.u] && mb[e.v]) {
            structural(z.contains(e), "an unprotected edge survived inside the larger side");
            ++inside_b;
        }
    structural(inside_b == static_cast<long long>(z.size()),
               "the larger side must keep exactly the protected matching");
    for (const Edge& e : z.edges())
        structural(rc.multiplicity(c.colour(e)) == 1, "a protected colour is still repeated");
    Frac keep = half_minus(p.eta);
    for (const Edge& e : reduced.edges()) {
        if (ma[e.u] == ma[e.v]) continue;
        int a_end = ma[e.u] ? e.u : e.v, b_end = ma[e.u] ? e.v : e.u;
        long long da = reduced.degree_in(a_end, mb), db = reduced.degree_in(b_end, ma);
        if (!keep.ge_mul(std::max(da, db), n))
            throw ConstructionError("a surviving cross edge lost both of its degree anchors");
    }

    ProtectedChoice out{std::move(z), std::move(reduced), std::move(rc),
                        "matching of size " + std::to_string(m) + " protected"};
    return out;
}

}  // namespace

ProtectedChoice choose_protected_set(const Graph& g, const Colouring& c,
                                     const Classification& cls, const Params& p,
                                     uint64_t seed) {
    if (!cls.partition)
        throw std::invalid_argument("classification must carry a witness partition");
    if (cls.tag == StructureTag::CloseToTwoCliques)
        return two_clique_choice(g, c, repair_two_clique(g, *cls.partition));
    if (cls.tag == StructureTag::CloseToBipartite)
        return biclique_choice(g, c, repair_biclique(g, *cls.partition, p.nu, p.gamma), p,
                               seed);
    throw std::invalid_argument("protected sets are built only for closeness tags");
}

namespace {

int tail_of(const DirectedHamCycle& h, const Edge& e) {
    return h.has_directed(e.u, e.v) ? e.u : e.v;
}

}  // namespace

std::optional<DirectedHamCycle> switching_search(const Graph& g, const Colouring& c,
                                                 const ProtectedSet& z, const SearchConfig& cfg,
                                                 SearchStats* stats) {
    cfg.validate();
    if (!z.subset_of(g))
        throw std::invalid_argument("protected edges must belong to the graph");
    if (!is_rainbow(c, z.edges()))
        throw std::invalid_argument("protected edges repeat a colour");

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    bool any_start = false;
    bool start_budget_hit = false;

    for (int r = 0; r < cfg.restarts; ++r) {
        uint64_t sr = derive_seed(cfg.seed, static_cast<uint64_t>(r));
        HamResult hr = find_ham_cycle(g, z, cfg.ham_budget, derive_seed(sr, 0));
        st.start_nodes += hr.nodes;
        ++st.restarts_used;
        if (hr.outcome != HamOutcome::Found) {
            if (hr.outcome == HamOutcome::Budget) start_budget_hit = true;
            continue;
        }
        any_start = true;
        DirectedHamCycle h = *hr.cycle;
        Rng rng(derive_seed(sr, 1));

        for (long long step = 0; step < cfg.max_steps; ++step) {
            std::vector<ConflictPair> pairs = conflict_pairs(c, h);
            if (cfg.beta_report) st.conflict_counts.push_back(static_cast<int>(pairs.size()));
            if (pairs.empty()) {
                st.found_on_restart = r;
                if (!verify(g, c, h, z))
                    throw std::logic_error("search produced a cycle that fails verification");
                return h;
            }
            ++st.steps;

            const ConflictPair& pick = pairs[rng.below(pairs.size())];
            bool e_prot = z.contains(pick.e), f_prot = z.contains(pick.f);
            if (e_prot && f_prot)
                throw std::logic_error("two protected edges share a colour past the gate");
            Edge first = pick.e, second = pick.f;
            if (e_prot) {
                first = pick.f;
                second = pick.f;
            } else if (f_prot) {
                second = pick.e;
            } else if (rng.below(2) == 1) {
                std::swap(first, second);
            }

            std::vector<SwitchSpec> pool = enumerate_admissible(g, h, tail_of(h, first), z);
            if (pool.empty() && !(second == first))
                pool = enumerate_admissible(g, h, tail_of(h, second), z);
            if (cfg.beta_report)
                st.admissible_counts.push_back(static_cast<long long>(pool.size()));
            if (pool.empty()) break;   // restart from a fresh starting cycle

            h = apply_switching(h, pool[rng.below(pool.size())]);
            for (const Edge& e : z.edges())
                if (!h.has_undirected(e.u, e.v))
                    throw std::logic_error("a protected edge fell off the cycle");
        }
    }

    if (!any_start)
        throw NoStartError(start_budget_hit
                               ? "no starting Hamilton cycle through the protected edges "
                                 "within the node budget"
                               : "the graph has no Hamilton cycle through the protected edges");
    return std::nullopt;
}

std::optional<DirectedHamCycle> find_rainbow_hc(const Graph& g, const Colouring& c,
                                                const Params& p, const SearchConfig& cfg,
                                                FindReport* report, bool allow_subdirac) {
    p.validate();
    cfg.validate();
    if (!allow_subdirac && !is_dirac(g))
        throw std::invalid_argument(
            "minimum degree is below half the order; pass the sub-Dirac override to search "
            "anyway");

    FindReport local;
    FindReport& rep = report ? *report : local;
    Classification cls = classify(g, p, derive_seed(cfg.seed, 101));
    rep.tag = cls.tag;

    bool closeness = cls.tag == StructureTag::CloseToTwoCliques ||
                     cls.tag == StructureTag::CloseToBipartite;
    if (closeness) {
        try {
            ProtectedChoice pc = choose_protected_set(g, c, cls, p, derive_seed(cfg.seed, 102));
            SearchConfig sub = cfg;
            sub.seed = derive_seed(cfg.seed, 103);
            std::optional<DirectedHamCycle> res =
                switching_search(pc.reduced, pc.reduced_c, pc.z, sub, &rep.stats);
            if (res) {
                if (!verify(g, c, *res, pc.z))
                    throw std::logic_error("reduced-graph cycle fails full verification");
                rep.attempts.push_back({to_string(cls.tag), pc.note + "; verified"});
                rep.found = true;
                return res;
            }
            rep.attempts.push_back({to_string(cls.tag), pc.note + "; budget exhausted"});
        } catch (const RepairError& e) {
            rep.attempts.push_back({to_string(cls.tag), e.what()});
        } catch (const SelectionError& e) {
            rep.attempts.push_back({to_string(cls.tag), e.what()});
        } catch (const ConstructionError& e) {
            rep.attempts.push_back({to_string(cls.tag), e.what()});
        } catch (const NoStartError& e) {
            rep.attempts.push_back({to_string(cls.tag), e.what()});
        }
    }

    SearchConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 104);
    try {
        std::optional<DirectedHamCycle> res =
            switching_search(g, c, ProtectedSet(), sub, &rep.stats);
        rep.attempts.push_back({"direct", res ? "verified" : "budget exhausted"});
        if (res) rep.found = true;
        return res;
    } catch (const NoStartError& e) {
        rep.attempts.push_back({"direct", e.what()});
        return std::nullopt;
    }
}

bool verify(const Graph& g, const Colouring& c, const DirectedHamCycle& h,
            const ProtectedSet& z) {
    if (!validate_ham_cycle(g, h, z)) return false;
    std::vector<Edge> edges = h.edge_set();
    for (const Edge& e : edges)
        if (!c.has(e.u, e.v)) return false;
    if (!is_rainbow(c, edges)) return false;
    for (const Edge& e : z.edges())
        if (!h.has_undirected(e.u, e.v)) return false;
    return true;
}

}  // namespace rainbow
