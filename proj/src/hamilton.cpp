#include "rainbow/hamilton.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "rainbow/rng.hpp"

namespace rainbow {

bool chvatal_check(const std::vector<int>& d) {
    int m = static_cast<int>(d.size());
    if (m < 3) throw std::invalid_argument("degree sequence needs at least 3 entries");
    for (int i = 1; i < m; ++i)
        if (d[i - 1] > d[i]) throw std::invalid_argument("degree sequence must be ascending");
    if (d[0] < 0 || d[m - 1] > m - 1) throw std::invalid_argument("degree out of range");
    for (int k = 1; 2 * k <= m; ++k)
        if (d[k - 1] <= k && d[m - k - 1] < m - k) return false;
    return true;
}

bool moon_moser_check(const Graph& g, const std::vector<int>& side_r,
                      const std::vector<int>& side_s) {
    int m = static_cast<int>(side_r.size());
    if (m < 2 || side_s.size() != side_r.size())
        throw std::invalid_argument("sides must be equal in size and have >= 2 vertices each");
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (const auto* side : {&side_r, &side_s})
        for (int v : *side) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("side vertex out of range");
            if (seen[v]) throw std::invalid_argument("sides overlap or repeat a vertex");
            seen[v] = 1;
        }
    std::vector<char> mask_r = g.mask_of(side_r), mask_s = g.mask_of(side_s);
    std::vector<int> dr, ds;
    for (int v : side_r) dr.push_back(g.degree_in(v, mask_s));
    for (int v : side_s) ds.push_back(g.degree_in(v, mask_r));
    std::sort(dr.begin(), dr.end());
    std::sort(ds.begin(), ds.end());
    for (int k = 1; 2 * k <= m; ++k)
        if (dr[k - 1] <= k || ds[k - 1] <= k) return false;
    return true;
}

namespace {

class CycleSearcher {
public:
    CycleSearcher(const Graph& g, const ProtectedSet& required, const SearchBudget& budget,
                  uint64_t seed)
        : g_(g), budget_(budget), n_(g.n()) {
        req_rem_.assign(n_, 0);
        req_nbrs_.assign(n_, {});
        req_used_.assign(static_cast<size_t>(n_) * n_, 0);
        for (const Edge& e : required.edges()) {
            req_nbrs_[e.u].push_back(e.v);
            req_nbrs_[e.v].push_back(e.u);
            ++req_rem_[e.u];
            ++req_rem_[e.v];
            ++total_req_;
        }
        unvis_deg_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) unvis_deg_[v] = g.degree(v);
        visited_.assign(n_, 0);
        priority_.resize(n_);
        std::iota(priority_.begin(), priority_.end(), 0);
        Rng rng(seed);
        rng.shuffle(priority_);
        std::vector<int> rank(n_);
        for (int i = 0; i < n_; ++i) rank[priority_[i]] = i;
        priority_ = std::move(rank);
        deadline_ = std::chrono::steady_clock::time_point::max();
        if (budget.time_limit_s > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget.time_limit_s));
    }

    HamResult run(int start) {
        start_ = start;
        path_.reserve(n_);
        place(start_);
        Step s = extend();
        HamResult out;
        out.nodes = nodes_;
        if (s == Step::Hit) {
            out.outcome = HamOutcome::Found;
            out.cycle = DirectedHamCycle::from_order(path_);
        } else if (s == Step::Stop) {
            out.outcome = HamOutcome::Budget;
        } else {
            out.outcome = HamOutcome::Exhausted;
        }
        return out;
    }

private:
    enum class Step { Hit, Dead, Stop };

    bool req_edge_unused(int u, int v) const {
        return req_rem_[u] > 0 && is_req_pair(u, v) && !req_used_[idx(u, v)];
    }
    bool is_req_pair(int u, int v) const {
        for (int w : req_nbrs_[u])
            if (w == v) return true;
        return false;
    }
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    void place(int v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (int w : g_.neighbours(v)) --unvis_deg_[w];
    }
    void unplace(int v) {
        for (int w : g_.neighbours(v)) ++unvis_deg_[w];
        visited_[v] = 0;
        path_.pop_back();
    }

    Step extend() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return Step::Stop;
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            return Step::Stop;

        int h = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            if (!g_.has_edge(h, start_)) return Step::Dead;
            long long closing = req_edge_unused(h, start_) ? 1 : 0;
            return used_req_ + closing == total_req_ ? Step::Hit : Step::Dead;
        }

        bool first = path_.size() == 1;
        std::vector<int> cand;
        if (req_rem_[h] > 0 && !first) {
            // an unused required edge at a non-start head must be walked now
            for (int w : req_nbrs_[h])
                if (!req_used_[idx(h, w)] && !visited_[w]) cand.push_back(w);
        } else {
            for (int w : g_.neighbours(h)) {
                if (visited_[w]) continue;
                bool via_req = req_edge_unused(h, w);
                // arriving on a plain edge consumes one of w's two cycle
                // slots; two pending required edges would not fit any more
                if (!via_req && req_rem_[w] == 2) continue;
                cand.push_back(w);
            }
        }
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            if (unvis_deg_[a] != unvis_deg_[b]) return unvis_deg_[a] < unvis_deg_[b];
            return priority_[a] < priority_[b];
        });

        for (int w : cand) {
            bool via_req = req_edge_unused(h, w);
            if (via_req) {
                req_used_[idx(h, w)] = req_used_[idx(w, h)] = 1;
                --req_rem_[h];
                --req_rem_[w];
                ++used_req_;
            }
            place(w);
            // h left the frontier, so partners of its unvisited neighbours
            // may have dropped below the two every vertex still needs
            bool dead = false;
            if (static_cast<int>(path_.size()) < n_) {
                for (int t : g_.neighbours(h)) {
                    if (visited_[t]) continue;
                    int avail = unvis_deg_[t] + (g_.has_edge(t, w) ? 1 : 0) +
                                (g_.has_edge(t, start_) ? 1 : 0);
                    if (avail < 2) {
                        dead = true;
                        break;
                    }
                }
            }
            Step s = dead ? Step::Dead : extend();
            if (s == Step::Hit || s == Step::Stop) return s;
            unplace(w);
            if (via_req) {
                req_used_[idx(h, w)] = req_used_[idx(w, h)] = 0;
                ++req_rem_[h];
                ++req_rem_[w];
                --used_req_;
            }
        }
        return Step::Dead;
    }

    const Graph& g_;
    const SearchBudget& budget_;
    int n_;
    int start_ = 0;
    long long nodes_ = 0;
    long long total_req_ = 0, used_req_ = 0;
    std::vector<int> path_, priority_, unvis_deg_, req_rem_;
    std::vector<std::vector<int>> req_nbrs_;
    std::vector<char> visited_, req_used_;
    std::chrono::steady_clock::time_point deadline_;
};

// walk the subgraph formed by the required edges from v; returns the vertex
// order if that component is a path or cycle starting best at an endpoint
std::vector<int> required_component(const std::vector<std::vector<int>>& req_nbrs, int v0,
                                    std::vector<char>& seen) {
    std::vector<int> comp{v0};
    seen[v0] = 1;
    int prev = -1, cur = v0;
    while (true) {
        int next = -1;
        for (int w : req_nbrs[cur])
            if (w != prev && !seen[w]) {
                next = w;
                break;
            }
        if (next == -1) break;
        seen[next] = 1;
        comp.push_back(next);
        prev = cur;
        cur = next;
    }
    return comp;
}

}  // namespace

HamResult find_ham_cycle(const Graph& g, const ProtectedSet& required, const SearchBudget& budget,
                         uint64_t seed) {
    budget.validate();
    int n = g.n();
    if (n < 3) return HamResult{HamOutcome::Exhausted, std::nullopt, 0};
    if (!required.subset_of(g)) throw std::invalid_argument("required edge not in the graph");

    std::vector<int> req_deg(n, 0);
    std::vector<std::vector<int>> req_nbrs(n);
    for (const Edge& e : required.edges()) {
        ++req_deg[e.u];
        ++req_deg[e.v];
        req_nbrs[e.u].push_back(e.v);
        req_nbrs[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v)
        if (req_deg[v] > 2)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " has more than two required edges");

    // components of the required subgraph must be paths; a cycle either is
    // the answer already (when spanning) or rules every Hamilton cycle out
    if (!required.empty()) {
        std::vector<char> seen(n, 0);
        // start walks at path endpoints so cycles are exactly the closed walks
        for (int pass = 0; pass < 2; ++pass)
            for (int v = 0; v < n; ++v) {
                if (seen[v] || req_deg[v] == 0) continue;
                if (pass == 0 && req_deg[v] != 1) continue;
                std::vector<int> comp = required_component(req_nbrs, v, seen);
                bool closed = req_deg[v] == 2;  // pass 1 only reaches cycles
                if (!closed) continue;
                if (static_cast<int>(comp.size()) == n) {
                    auto h = DirectedHamCycle::from_order(comp);
                    return HamResult{HamOutcome::Found, h, 0};
                }
                throw std::invalid_argument("required edges close a short cycle");
            }
    }

    int start = -1;
    if (!required.empty()) {
        for (int v = 0; v < n && start < 0; ++v)
            if (req_deg[v] == 1) start = v;
    }
    if (start < 0) {
        start = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(start)) start = v;
    }

    CycleSearcher searcher(g, required, budget, seed);
    return searcher.run(start);
}

namespace {

// spanning path of g between s and t, via a spanning cycle of g plus one
// auxiliary degree-2 vertex whose edges pin the path's two ends
std::optional<std::vector<int>> spanning_path(const Graph& g, const std::vector<int>& verts,
                                              int s, int t, const SearchBudget& budget,
                                              uint64_t seed, long long& nodes) {
    int k = static_cast<int>(verts.size());
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < k; ++i) local[verts[i]] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
    int aux = k;
    edges.emplace_back(aux, local[s]);
    edges.emplace_back(aux, local[t]);
    Graph ag(k + 1, edges);
    HamResult r = find_ham_cycle(ag, ProtectedSet{}, budget, seed);
    nodes += r.nodes;
    if (r.outcome != HamOutcome::Found) return std::nullopt;

    std::vector<int> path;
    int cur = r.cycle->succ(aux);
    while (cur != aux) {
        path.push_back(verts[cur]);
        cur = r.cycle->succ(cur);
    }
    if (path.front() != s) std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

HamResult two_clique_ham(const Graph& g, const std::vector<int>& side_a, const Edge& f,
                         const Edge& f_prime, const SearchBudget& budget, uint64_t seed) {
    budget.validate();
    int n = g.n();
    std::vector<char> in_a(n, 0);
    for (int v : side_a) {
        if (v < 0 || v >= n) throw std::invalid_argument("side vertex out of range");
        if (in_a[v]) throw std::invalid_argument("side repeats a vertex");
        in_a[v] = 1;
    }
    std::vector<int> side_b = g.complement_of(side_a);
    if (side_a.size() < 2 || side_b.size() < 2)
        throw std::invalid_argument("each side needs at least 2 vertices");
    if (!g.has_edge(f) || !g.has_edge(f_prime))
        throw std::invalid_argument("connector edge not in the graph");
    if (f == f_prime || f.u == f_prime.u || f.u == f_prime.v || f.v == f_prime.u ||
        f.v == f_prime.v)
        throw std::invalid_argument("connector edges must be vertex-disjoint");

    auto split = [&](const Edge& e) -> std::pair<int, int> {  // (A end, B end)
        bool ua = in_a[e.u], va = in_a[e.v];
        if (ua == va) throw std::invalid_argument("connector edge does not cross the sides");
        return ua ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
    };
    auto [a0, b0] = split(f);
    auto [a1, b1] = split(f_prime);

    long long nodes = 0;
    std::vector<int> sorted_a = side_a;
    std::sort(sorted_a.begin(), sorted_a.end());
    auto pa = spanning_path(g, sorted_a, a0, a1, budget, derive_seed(seed, 1), nodes);
    if (pa) {
        auto pb = spanning_path(g, side_b, b1, b0, budget, derive_seed(seed, 2), nodes);
        if (pb) {
            std::vector<int> order = *pa;  // a0 .. a1, then f', then b1 .. b0, then f closes
            order.insert(order.end(), pb->begin(), pb->end());
            auto h = DirectedHamCycle::from_order(order);
            if (!validate_ham_cycle(g, h, ProtectedSet{{f, f_prime}}))
                throw std::logic_error("assembled cycle failed validation");
            return HamResult{HamOutcome::Found, h, nodes};
        }
    }

    HamResult direct = find_ham_cycle(g, ProtectedSet{{f, f_prime}}, budget, derive_seed(seed, 3));
    nodes += direct.nodes;
    if (direct.outcome == HamOutcome::Found) {
        direct.nodes = nodes;
        return direct;
    }
    throw ConstructionError(direct.outcome == HamOutcome::Budget
                                ? "two-clique construction failed and the direct search ran out "
                                  "of budget"
                                : "two-clique construction failed and no spanning cycle through "
                                  "the connectors exists");
}

HamResult biclique_ham(const Graph& g, const std::vector<int>& side_a,
                       const std::vector<int>& side_b, const std::vector<Edge>& matching,
                       const SearchBudget& budget, uint64_t seed) {
    budget.validate();
    int n = g.n();
    std::vector<int> side(n, -1);  // 0 = A, 1 = B
    for (int v : side_a) {
        if (v < 0 || v >= n || side[v] >= 0) throw std::invalid_argument("bad side A");
        side[v] = 0;
    }
    for (int v : side_b) {
        if (v < 0 || v >= n || side[v] >= 0) throw std::invalid_argument("bad side B");
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] < 0) throw std::invalid_argument("sides must cover every vertex");
    int m = static_cast<int>(matching.size());
    if (static_cast<int>(side_b.size()) - static_cast<int>(side_a.size()) != m)
        throw std::invalid_argument("matching size must equal the side imbalance");
    std::vector<char> matched(n, 0);
    for (const Edge& e : matching) {
        if (!g.has_edge(e)) throw std::invalid_argument("matching edge not in the graph");
        if (side[e.u] != 1 || side[e.v] != 1)
            throw std::invalid_argument("matching edges must lie inside side B");
        if (matched[e.u] || matched[e.v]) throw std::invalid_argument("matching is not disjoint");
        matched[e.u] = matched[e.v] = 1;
    }

    long long nodes = 0;
    auto fall_back = [&](uint64_t s) -> HamResult {
        HamResult direct = find_ham_cycle(g, ProtectedSet{matching, true}, budget, s);
        nodes += direct.nodes;
        if (direct.outcome == HamOutcome::Found) {
            direct.nodes = nodes;
            return direct;
        }
        throw ConstructionError(direct.outcome == HamOutcome::Budget
                                    ? "near-bipartite construction failed and the direct search "
                                      "ran out of budget"
                                    : "near-bipartite construction failed and no spanning cycle "
                                      "through the matching exists");
    };
    if (m == 0) return fall_back(derive_seed(seed, 2));

    // chain the matching edges into one path b_1 b_1' a_1 b_2 b_2' a_2 ...
    // b_m b_m', each a_i a fresh common neighbour of its two B-ends
    std::vector<Edge> chain = matching;
    std::sort(chain.begin(), chain.end());
    std::vector<int> path;
    std::vector<char> used_a(n, 0);
    bool chained = true;
    for (int i = 0; i < m && chained; ++i) {
        path.push_back(chain[i].u);
        path.push_back(chain[i].v);
        if (i + 1 == m) break;
        int link = -1;
        for (int w : g.neighbours(chain[i].v)) {
            if (side[w] != 0 || used_a[w]) continue;
            if (g.has_edge(w, chain[i + 1].u)) {
                link = w;
                break;
            }
        }
        if (link == -1) {
            chained = false;
            break;
        }
        used_a[link] = 1;
        path.push_back(link);
    }

    if (chained) {
        int p_first = path.front(), p_last = path.back();
        // remainder: A minus the chain links plus an auxiliary vertex that
        // stands for the whole chain, B minus the chain's interior
        std::vector<char> interior(n, 0);
        for (int v : path) interior[v] = 1;
        interior[p_first] = interior[p_last] = 0;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (!interior[v]) verts.push_back(v);
        int k = static_cast<int>(verts.size());
        std::vector<int> local(n, -1);
        for (int i = 0; i < k; ++i) local[verts[i]] = i;
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) {
            if (local[e.u] < 0 || local[e.v] < 0) continue;
            if (Edge(e.u, e.v) == Edge(p_first, p_last)) continue;  // chain already joins them
            edges.emplace_back(local[e.u], local[e.v]);
        }
        int aux = k;
        edges.emplace_back(aux, local[p_first]);
        edges.emplace_back(aux, local[p_last]);
        Graph ag(k + 1, edges);
        HamResult r = find_ham_cycle(ag, ProtectedSet{}, budget, derive_seed(seed, 1));
        nodes += r.nodes;
        if (r.outcome == HamOutcome::Found) {
            std::vector<int> order;
            int cur = r.cycle->succ(aux);
            while (cur != aux) {
                order.push_back(verts[cur]);
                cur = r.cycle->succ(cur);
            }
            // splice the chain in place of the auxiliary vertex: the chain
            // continues from order.back() and wraps around to order.front()
            std::vector<int> mid(path.begin() + 1, path.end() - 1);
            if (order.back() == p_last) std::reverse(mid.begin(), mid.end());
            order.insert(order.end(), mid.begin(), mid.end());
            auto h = DirectedHamCycle::from_order(order);
            if (!validate_ham_cycle(g, h, ProtectedSet{matching, true}))
                throw std::logic_error("assembled cycle failed validation");
            return HamResult{HamOutcome::Found, h, nodes};
        }
    }

    return fall_back(derive_seed(seed, 2));
}

}  // namespace rainbow
