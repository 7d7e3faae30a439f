#include "rainbow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rainbow {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: n must be positive");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    nbr_.assign(n, {});
    edges_ = edges;
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.v >= n) throw std::invalid_argument("Graph: vertex out of range: " + std::to_string(e.v));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("Graph: duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adj_[static_cast<size_t>(e.u) * n + e.v] = 1;
        adj_[static_cast<size_t>(e.v) * n + e.u] = 1;
        nbr_[e.u].push_back(e.v);
        nbr_[e.v].push_back(e.u);
    }
    for (auto& lst : nbr_) std::sort(lst.begin(), lst.end());
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::degree_in(int v, const std::vector<char>& mask) const {
    check_vertex(v);
    int d = 0;
    for (int w : nbr_[v])
        if (mask[w]) ++d;
    return d;
}

long long Graph::edges_inside(const std::vector<char>& mask) const {
    long long e = 0;
    for (const Edge& ed : edges_)
        if (mask[ed.u] && mask[ed.v]) ++e;
    return e;
}

long long Graph::edges_between(const std::vector<char>& a, const std::vector<char>& b) const {
    long long e = 0;
    for (const Edge& ed : edges_)
        if ((a[ed.u] && b[ed.v]) || (a[ed.v] && b[ed.u])) ++e;
    return e;
}

long long Graph::edges_across(const std::vector<char>& mask) const {
    long long e = 0;
    for (const Edge& ed : edges_)
        if (mask[ed.u] != mask[ed.v]) ++e;
    return e;
}

std::vector<char> Graph::mask_of(const std::vector<int>& verts) const {
    std::vector<char> m(n_, 0);
    for (int v : verts) {
        check_vertex(v);
        m[v] = 1;
    }
    return m;
}

std::vector<int> Graph::complement_of(const std::vector<int>& verts) const {
    std::vector<char> m = mask_of(verts);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (!m[v]) out.push_back(v);
    return out;
}

Colouring::Colouring(const Graph& g, const std::vector<int>& colour_per_edge) : n_(g.n()) {
    if (colour_per_edge.size() != g.edges().size())
        throw std::invalid_argument("Colouring: colour list does not match edge list");
    matrix_.assign(static_cast<size_t>(n_) * n_, -1);
    for (size_t i = 0; i < colour_per_edge.size(); ++i) {
        int c = colour_per_edge[i];
        if (c < 0) throw std::invalid_argument("Colouring: negative colour id");
        const Edge& e = g.edges()[i];
        matrix_[static_cast<size_t>(e.u) * n_ + e.v] = c;
        matrix_[static_cast<size_t>(e.v) * n_ + e.u] = c;
        ++mult_[c];
        ++m_;
    }
}

bool Colouring::has(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return matrix_[static_cast<size_t>(u) * n_ + v] >= 0;
}

int Colouring::colour(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("Colouring: vertex out of range");
    int c = u == v ? -1 : matrix_[static_cast<size_t>(u) * n_ + v];
    if (c < 0)
        throw std::invalid_argument("Colouring: uncoloured pair " + std::to_string(u) + "-" +
                                    std::to_string(v));
    return c;
}

long long Colouring::multiplicity(int c) const {
    auto it = mult_.find(c);
    return it == mult_.end() ? 0 : it->second;
}

long long Colouring::max_multiplicity() const {
    long long best = 0;
    for (const auto& [c, k] : mult_) best = std::max(best, k);
    return best;
}

Colouring Colouring::restricted_to(const Graph& sub) const {
    if (sub.n() != n_) throw std::invalid_argument("Colouring: subgraph has different vertex count");
    std::vector<int> per_edge;
    per_edge.reserve(sub.edges().size());
    for (const Edge& e : sub.edges()) per_edge.push_back(colour(e.u, e.v));
    return Colouring(sub, per_edge);
}

DirectedHamCycle::DirectedHamCycle(std::vector<int> succ) : succ_(std::move(succ)) {
    int n = static_cast<int>(succ_.size());
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    pred_.assign(n, -1);
    pos_.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int s = succ_[v];
        if (s < 0 || s >= n || s == v) throw std::invalid_argument("successor out of range");
        if (pred_[s] != -1) throw std::invalid_argument("successor map is not a permutation");
        pred_[s] = v;
    }
    int v = 0;
    for (int i = 0; i < n; ++i) {
        if (pos_[v] != -1) throw std::invalid_argument("successor map is not a single cycle");
        pos_[v] = i;
        v = succ_[v];
    }
    if (v != 0) throw std::invalid_argument("successor map is not a single cycle");
}

DirectedHamCycle DirectedHamCycle::from_order(const std::vector<int>& order) {
    int n = static_cast<int>(order.size());
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<int> succ(n, -1);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range in cycle order");
        if (seen[v]) throw std::invalid_argument("repeated vertex in cycle order");
        seen[v] = 1;
        succ[v] = order[(i + 1) % n];
    }
    return DirectedHamCycle(std::move(succ));
}

DirectedHamCycle DirectedHamCycle::reversed() const { return DirectedHamCycle(pred_); }

std::vector<int> DirectedHamCycle::order() const {
    std::vector<int> out;
    out.reserve(n());
    int v = 0;
    for (int i = 0; i < n(); ++i) {
        out.push_back(v);
        v = succ_[v];
    }
    return out;
}

std::vector<Edge> DirectedHamCycle::edge_set() const {
    std::vector<Edge> out;
    out.reserve(n());
    for (int v = 0; v < n(); ++v) out.emplace_back(v, succ_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

ProtectedSet::ProtectedSet(std::vector<Edge> edges, bool require_matching)
    : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("protected set: duplicate edge");
    if (require_matching && !is_matching())
        throw std::invalid_argument("protected set: edges are not vertex-disjoint");
}

bool ProtectedSet::contains(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

bool ProtectedSet::is_matching() const {
    std::set<int> seen;
    for (const Edge& e : edges_) {
        if (!seen.insert(e.u).second) return false;
        if (!seen.insert(e.v).second) return false;
    }
    return true;
}

bool ProtectedSet::subset_of(const Graph& g) const {
    for (const Edge& e : edges_)
        if (e.v >= g.n() || !g.has_edge(e.u, e.v)) return false;
    return true;
}

namespace {

// splits a file into meaningful lines, skipping blanks and '#' comments,
// but keeps the original line numbers for error reporting
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& line, int lineno, size_t expect) {
    std::istringstream in(line);
    std::vector<long long> vals;
    long long x;
    while (in >> x) vals.push_back(x);
    std::string junk;
    if (in.clear(), in >> junk)
        throw ParseError(lineno, "unexpected token '" + junk + "'");
    if (vals.size() != expect)
        throw ParseError(lineno, "expected " + std::to_string(expect) + " integers, got " +
                                     std::to_string(vals.size()));
    return vals;
}

}  // namespace

std::pair<Graph, Colouring> parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header");
    auto head = parse_ints(lines[0].second, lines[0].first, 2);
    long long n = head[0], m = head[1];
    if (n < 1 || n > 1000000) throw ParseError(lines[0].first, "bad vertex count");
    if (m < 0) throw ParseError(lines[0].first, "bad edge count");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines[0].first,
                         "header promises " + std::to_string(m) + " edges, file has " +
                             std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    std::vector<int> colours;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i].second, lines[i].first, 3);
        long long u = vals[0], v = vals[1], c = vals[2];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lines[i].first, "vertex out of range");
        if (u >= v) throw ParseError(lines[i].first, "edges must satisfy u < v");
        if (c < 0) throw ParseError(lines[i].first, "negative colour");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        colours.push_back(static_cast<int>(c));
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j])
                throw ParseError(lines[j + 1].first, "duplicate edge");
    // Graph sorts its edge list; re-align colours with it.
    Graph g(static_cast<int>(n), edges);
    std::vector<int> aligned(edges.size());
    std::vector<std::pair<Edge, int>> paired;
    paired.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) paired.emplace_back(edges[i], colours[i]);
    std::sort(paired.begin(), paired.end());
    for (size_t i = 0; i < paired.size(); ++i) aligned[i] = paired[i].second;
    return {g, Colouring(g, aligned)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::pair<Graph, Colouring> load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string graph_to_string(const Graph& g, const Colouring& c) {
    std::ostringstream out;
    out << g.n() << " " << g.m() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << " " << c.colour(e) << "\n";
    return out.str();
}

void save_graph(const std::string& path, const Graph& g, const Colouring& c) {
    write_file(path, graph_to_string(g, c));
}

DirectedHamCycle parse_cycle(const std::string& text, int n) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty cycle file");
    if (lines.size() > 1) throw ParseError(lines[1].first, "cycle file must be a single line");
    auto vals = parse_ints(lines[0].second, lines[0].first, static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(vals.size());
    for (long long v : vals) {
        if (v < 0 || v >= n) throw ParseError(lines[0].first, "vertex out of range");
        order.push_back(static_cast<int>(v));
    }
    try {
        return DirectedHamCycle::from_order(order);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, e.what());
    }
}

DirectedHamCycle load_cycle(const std::string& path, int n) { return parse_cycle(read_file(path), n); }

std::string cycle_to_string(const DirectedHamCycle& h) {
    std::ostringstream out;
    auto ord = h.order();
    for (size_t i = 0; i < ord.size(); ++i) out << (i ? " " : "") << ord[i];
    out << "\n";
    return out.str();
}

void save_cycle(const std::string& path, const DirectedHamCycle& h) {
    write_file(path, cycle_to_string(h));
}

ProtectedSet parse_edge_set(const std::string& text, int n) {
    std::vector<Edge> edges;
    for (const auto& [no, line] : content_lines(text)) {
        auto vals = parse_ints(line, no, 2);
        if (vals[0] < 0 || vals[1] < 0 || vals[0] >= n || vals[1] >= n)
            throw ParseError(no, "vertex out of range");
        if (vals[0] == vals[1]) throw ParseError(no, "loop edge");
        edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    }
    return ProtectedSet(std::move(edges));
}

ProtectedSet load_edge_set(const std::string& path, int n) {
    return parse_edge_set(read_file(path), n);
}

std::string edge_set_to_string(const ProtectedSet& z) {
    std::ostringstream out;
    for (const Edge& e : z.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

bool is_dirac(const Graph& g) {
    if (g.n() < 3) throw std::invalid_argument("is_dirac: need n >= 3");
    return 2LL * g.min_degree() >= g.n();
}

bool validate_ham_cycle(const Graph& g, const DirectedHamCycle& h, const ProtectedSet& z) {
    if (g.n() != h.n()) throw std::invalid_argument("validate_ham_cycle: size mismatch");
    for (int v = 0; v < g.n(); ++v)
        if (!g.has_edge(v, h.succ(v))) return false;
    for (const Edge& e : z.edges())
        if (e.v >= h.n() || !h.has_undirected(e.u, e.v)) return false;
    return true;
}

bool is_rainbow(const Colouring& c, const std::vector<Edge>& edges) {
    std::set<int> seen;
    for (const Edge& e : edges) {
        int col = c.colour(e.u, e.v);  // throws if uncoloured
        if (!seen.insert(col).second) return false;
    }
    return true;
}

}  // namespace rainbow
