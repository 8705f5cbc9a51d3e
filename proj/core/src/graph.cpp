#include "ivec/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ivec {

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("part sizes must be nonnegative");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.x < 1 || e.x > m_ || e.y < 1 || e.y > n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("duplicate edge");
    }
    adj_x_.resize(m_ + 1);
    adj_y_.resize(n_ + 1);
    inc_x_.resize(m_ + 1);
    inc_y_.resize(n_ + 1);
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[i];
        adj_x_[e.x].push_back(e.y);
        adj_y_[e.y].push_back(e.x);
        inc_x_[e.x].push_back(i);
        inc_y_[e.y].push_back(i);
    }
    for (auto& v : adj_y_) std::sort(v.begin(), v.end());
}

int BipartiteGraph::degree(Side s, int v) const {
    return static_cast<int>(neighbors(s, v).size());
}

const std::vector<int>& BipartiteGraph::neighbors(Side s, int v) const {
    const auto& adj = (s == Side::X) ? adj_x_ : adj_y_;
    if (v < 1 || v >= static_cast<int>(adj.size()))
        throw std::invalid_argument("vertex out of range");
    return adj[v];
}

const std::vector<int>& BipartiteGraph::incident_edges(Side s, int v) const {
    const auto& inc = (s == Side::X) ? inc_x_ : inc_y_;
    if (v < 1 || v >= static_cast<int>(inc.size()))
        throw std::invalid_argument("vertex out of range");
    return inc[v];
}

int BipartiteGraph::max_degree() const {
    return std::max(max_degree(Side::X), max_degree(Side::Y));
}

int BipartiteGraph::max_degree(Side s) const {
    int d = 0;
    for (int v = 1; v <= part_size(s); ++v) d = std::max(d, degree(s, v));
    return d;
}

int BipartiteGraph::min_degree(Side s) const {
    if (part_size(s) == 0) return 0;
    int d = edge_count();
    for (int v = 1; v <= part_size(s); ++v) d = std::min(d, degree(s, v));
    return d;
}

int BipartiteGraph::edge_index(int x, int y) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{x, y});
    if (it == edges_.end() || !(*it == Edge{x, y})) return -1;
    return static_cast<int>(it - edges_.begin());
}

BipartiteGraph transpose(const BipartiteGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({e.y, e.x});
    return BipartiteGraph(g.y_count(), g.x_count(), std::move(edges));
}

BipartiteGraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("complete_bipartite: parts must be nonempty");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= n; ++y) edges.push_back({x, y});
    return BipartiteGraph(m, n, std::move(edges));
}

BipartiteGraph even_cycle(int s) {
    if (s < 2) throw std::invalid_argument("even_cycle: need s >= 2");
    std::vector<Edge> edges;
    edges.reserve(2 * s);
    for (int i = 1; i <= s; ++i) {
        edges.push_back({i, i});
        edges.push_back({i, i % s + 1});
    }
    return BipartiteGraph(s, s, std::move(edges));
}

std::optional<std::pair<int, int>> uniform_degrees(const BipartiteGraph& g) {
    if (g.x_count() == 0 || g.y_count() == 0 || g.edge_count() == 0)
        return std::nullopt;
    int l = g.degree_x(1);
    for (int x = 2; x <= g.x_count(); ++x)
        if (g.degree_x(x) != l) return std::nullopt;
    int k = g.degree_y(1);
    for (int y = 2; y <= g.y_count(); ++y)
        if (g.degree_y(y) != k) return std::nullopt;
    return std::make_pair(l, k);
}

std::optional<BiregularSignature> classify_biregular(const BipartiteGraph& g) {
    auto deg = uniform_degrees(g);
    if (!deg) return std::nullopt;
    auto [l, k] = *deg;
    if (g.x_count() >= g.y_count())
        return BiregularSignature{g.x_count(), l, g.y_count(), k, false};
    return BiregularSignature{g.y_count(), k, g.x_count(), l, true};
}

BipartiteGraph random_biregular(int m, int l, int n, int k, std::uint64_t seed) {
    if (m < 1 || l < 1 || n < 1 || k < 1)
        throw std::invalid_argument("random_biregular: parameters must be positive");
    if (m < n) throw std::invalid_argument("random_biregular: need m >= n");
    if (static_cast<long long>(m) * l != static_cast<long long>(n) * k)
        throw std::invalid_argument("random_biregular: need m*l == n*k");
    if (l > n || k > m)
        throw std::invalid_argument("random_biregular: infeasible for a simple graph");

    std::mt19937_64 rng(seed);
    const int edge_total = m * l;

    // Circulant base graph: x_i takes the l consecutive Y slots starting at
    // i*l (mod n). The arcs tile the residues 0..ml-1, so every y lands on
    // exactly k = ml/n of them, and l <= n keeps each arc duplicate-free.
    std::vector<Edge> edges;
    edges.reserve(edge_total);
    std::vector<std::vector<char>> adj(m + 1, std::vector<char>(n + 1, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < l; ++j) {
            int y = (i * l + j) % n + 1;
            edges.push_back({i + 1, y});
            adj[i + 1][y] = 1;
        }

    // Randomize with degree-preserving 2-edge swaps that keep the graph
    // simple. Forced instances (e.g. l == n) admit no swaps and stay
    // canonical, which is still a valid draw.
    std::uniform_int_distribution<int> pick(0, edge_total - 1);
    int swaps = 0;
    for (int attempt = 0; attempt < 100 * edge_total && swaps < 10 * edge_total;
         ++attempt) {
        Edge& a = edges[pick(rng)];
        Edge& b = edges[pick(rng)];
        if (a.x == b.x || a.y == b.y) continue;
        if (adj[a.x][b.y] || adj[b.x][a.y]) continue;
        adj[a.x][a.y] = adj[b.x][b.y] = 0;
        std::swap(a.y, b.y);
        adj[a.x][a.y] = adj[b.x][b.y] = 1;
        ++swaps;
    }
    return BipartiteGraph(m, n, std::move(edges));
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 const std::vector<int>& x_subset,
                                 const std::vector<int>& y_subset) {
    std::vector<int> xs = x_subset, ys = y_subset;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<int> x_inv(g.x_count() + 1, 0), y_inv(g.y_count() + 1, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1 || xs[i] > g.x_count())
            throw std::invalid_argument("induced_subgraph: X index out of range");
        x_inv[xs[i]] = static_cast<int>(i) + 1;
    }
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] < 1 || ys[i] > g.y_count())
            throw std::invalid_argument("induced_subgraph: Y index out of range");
        y_inv[ys[i]] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (x_inv[e.x] && y_inv[e.y]) edges.push_back({x_inv[e.x], y_inv[e.y]});
    return InducedSubgraph{
        BipartiteGraph(static_cast<int>(xs.size()), static_cast<int>(ys.size()),
                       std::move(edges)),
        std::move(xs), std::move(ys)};
}

namespace {

// Strips comments, skips blank lines, reports 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            auto end = raw.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            out = raw.substr(0, end + 1);
            return true;
        }
        return false;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(0, "missing header");
    std::istringstream head(line);
    std::string tag;
    int m = 0, n = 0, count = -1;
    if (!(head >> tag >> m >> n >> count) || tag != "bipartite")
        throw ParseError(reader.line(), "expected 'bipartite <m> <n> <edge_count>'");
    if (m < 0 || n < 0 || count < 0)
        throw ParseError(reader.line(), "negative header field");
    std::vector<Edge> edges;
    edges.reserve(count);
    for (int i = 0; i < count; ++i) {
        if (!reader.next(line))
            throw ParseError(0, "unexpected end of input: expected " +
                                    std::to_string(count) + " edges, got " +
                                    std::to_string(i));
        std::istringstream es(line);
        int x = 0, y = 0;
        std::string extra;
        if (!(es >> tag >> x >> y) || tag != "e" || (es >> extra))
            throw ParseError(reader.line(), "expected 'e <x> <y>'");
        if (x < 1 || x > m)
            throw ParseError(reader.line(), "x index out of range");
        if (y < 1 || y > n)
            throw ParseError(reader.line(), "y index out of range");
        edges.push_back({x, y});
    }
    if (reader.next(line))
        throw ParseError(reader.line(), "trailing content after edge list");
    std::vector<Edge> check = edges;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw ParseError(0, "duplicate edge");
    return BipartiteGraph(m, n, std::move(edges));
}

BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string emit_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "bipartite " << g.x_count() << ' ' << g.y_count() << ' '
        << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.x << ' ' << e.y << '\n';
    return out.str();
}

}  // namespace ivec
