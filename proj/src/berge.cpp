#include "rainbow/berge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rainbow {

Hypergraph::Hypergraph(int n_, int r_, std::vector<std::vector<int>> edges_)
    : n(n_), r(r_), edges(std::move(edges_)) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n < r) throw std::invalid_argument("fewer vertices than the uniformity");
    std::set<std::vector<int>> seen;
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("hyperedge size differs from the uniformity");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n) throw std::invalid_argument("hyperedge vertex out of range");
            if (i > 0 && e[i - 1] >= e[i])
                throw std::invalid_argument("hyperedge vertices must be strictly ascending");
        }
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate hyperedge");
    }
}

boost::multiprecision::cpp_int degree_threshold(int n, int r) {
    if (r < 2 || r > n) throw std::invalid_argument("need 2 <= r <= n");
    long long top = (n + 1) / 2 - 1, k = r - 1;
    boost::multiprecision::cpp_int out = 1;
    if (k > top) return 0;
    for (long long i = 1; i <= k; ++i) {
        out *= top - k + i;
        out /= i;
    }
    return out;
}

long long min_vertex_degree(const Hypergraph& h) {
    std::vector<long long> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    return *std::min_element(deg.begin(), deg.end());
}

Shadow shadow_reduce(const Hypergraph& h) {
    std::map<Edge, int> best;   // pair -> index of lexicographically smallest hyperedge
    for (size_t idx = 0; idx < h.edges.size(); ++idx) {
        const auto& e = h.edges[idx];
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                Edge uv(e[i], e[j]);
                auto it = best.find(uv);
                if (it == best.end() || h.edges[idx] < h.edges[it->second])
                    best[uv] = static_cast<int>(idx);
            }
    }
    std::vector<Edge> edges;
    std::vector<int> colours;
    for (const auto& [uv, idx] : best) {
        edges.push_back(uv);
        colours.push_back(idx);
    }
    Graph g(h.n, edges);
    Colouring c(g, colours);
    long long cap = static_cast<long long>(h.r) * (h.r - 1) / 2;
    if (!edges.empty() && c.max_multiplicity() > cap)
        throw std::logic_error("shadow colouring exceeds its pair bound");
    return Shadow{std::move(g), std::move(c)};
}

std::optional<BergeCycle> berge_hamilton(const Hypergraph& h, const SearchConfig& cfg) {
    if (h.n < 3) return std::nullopt;
    Shadow sh = shadow_reduce(h);
    Params p;
    std::optional<DirectedHamCycle> hc =
        find_rainbow_hc(sh.g, sh.c, p, cfg, nullptr, /*allow_subdirac=*/true);
    if (!hc) return std::nullopt;

    BergeCycle b;
    b.vertices = hc->order();
    for (int i = 0; i < h.n; ++i) {
        int u = b.vertices[i], v = b.vertices[(i + 1) % h.n];
        b.hyperedges.push_back(sh.c.colour(Edge(u, v)));
    }
    if (!verify_berge(h, b))
        throw std::logic_error("translated rainbow cycle fails the Berge requirements");
    return b;
}

bool verify_berge(const Hypergraph& h, const BergeCycle& b) {
    int n = h.n;
    if (static_cast<int>(b.vertices.size()) != n) return false;
    if (static_cast<int>(b.hyperedges.size()) != n) return false;
    std::vector<char> seen_v(n, 0);
    for (int v : b.vertices) {
        if (v < 0 || v >= n || seen_v[v]) return false;
        seen_v[v] = 1;
    }
    std::set<int> seen_e;
    for (int e : b.hyperedges) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) return false;
        if (!seen_e.insert(e).second) return false;
    }
    for (int i = 0; i < n; ++i) {
        const auto& he = h.edges[b.hyperedges[i]];
        int u = b.vertices[i], v = b.vertices[(i + 1) % n];
        if (!std::binary_search(he.begin(), he.end(), u)) return false;
        if (!std::binary_search(he.begin(), he.end(), v)) return false;
    }
    return true;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, r = 0;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> n >> m >> r)) {
                std::string rest;
                if (ls.clear(), ls.str(line), ls >> rest)
                    throw ParseError(lineno, "expected header: n m r");
                continue;   // blank or comment before the header
            }
            if (m < 0) throw ParseError(lineno, "negative edge count");
            have_header = true;
            continue;
        }
        std::vector<int> e;
        int v;
        while (ls >> v) e.push_back(v);
        if (e.empty()) continue;
        if (r >= 2 && static_cast<int>(e.size()) != r)
            throw ParseError(lineno, "hyperedge must list exactly r vertices");
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError(lineno, "missing header: n m r");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count differs from the header");
    try {
        return Hypergraph(n, r, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Hypergraph load_hypergraph(const std::string& path) {
    return parse_hypergraph(read_file(path));
}

std::string hypergraph_to_string(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n << ' ' << h.edges.size() << ' ' << h.r << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
    write_file(path, hypergraph_to_string(h));
}

std::string berge_to_string(const BergeCycle& b) {
    std::ostringstream out;
    for (size_t i = 0; i < b.vertices.size(); ++i) {
        if (i) out << ' ';
        out << b.vertices[i] << ' ' << b.hyperedges[i];
    }
    return out.str();
}

}  // namespace rainbow
