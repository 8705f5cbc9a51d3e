#include "ivec/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivec {

int BipartiteMultigraph::degree(Side s, int v) const {
    int d = 0;
    for (const MultiEdge& e : edges)
        if ((s == Side::X ? e.x : e.y) == v) ++d;
    return d;
}

bool BipartiteMultigraph::is_regular(int r) const {
    for (int x = 1; x <= x_count; ++x)
        if (degree(Side::X, x) != r) return false;
    for (int y = 1; y <= y_count; ++y)
        if (degree(Side::Y, y) != r) return false;
    return true;
}

BipartiteMultigraph regularize(const BipartiteGraph& g, int r) {
    if (r < g.max_degree())
        throw std::invalid_argument("regularize: r below maximum degree");
    if (r < 1) throw std::invalid_argument("regularize: r must be positive");

    int size = std::max(g.x_count(), g.y_count());
    BipartiteMultigraph m{size, size, {}};
    m.edges.reserve(static_cast<std::size_t>(size) * r);
    for (int i = 0; i < g.edge_count(); ++i)
        m.edges.push_back({g.edge(i).x, g.edge(i).y, i});

    std::vector<int> dx(size + 1, 0), dy(size + 1, 0);
    for (const MultiEdge& e : m.edges) {
        ++dx[e.x];
        ++dy[e.y];
    }
    int x = 1, y = 1;
    while (true) {
        while (x <= size && dx[x] >= r) ++x;
        while (y <= size && dy[y] >= r) ++y;
        if (x > size || y > size) break;
        m.edges.push_back({x, y, -1});
        ++dx[x];
        ++dy[y];
    }
    return m;
}

namespace {

// Kuhn augmenting-path matching over a fixed list of available edge ids.
struct Matcher {
    const BipartiteMultigraph& m;
    std::vector<std::vector<int>> adj;   // x -> available edge ids
    std::vector<int> match_x, match_y;   // vertex -> matched edge id or -1
    std::vector<char> visited_y;

    Matcher(const BipartiteMultigraph& mg, const std::vector<char>& available)
        : m(mg),
          adj(mg.x_count + 1),
          match_x(mg.x_count + 1, -1),
          match_y(mg.y_count + 1, -1),
          visited_y(mg.y_count + 1, 0) {
        for (int i = 0; i < static_cast<int>(m.edges.size()); ++i)
            if (available[i]) adj[m.edges[i].x].push_back(i);
    }

    bool augment(int x) {
        for (int ei : adj[x]) {
            int y = m.edges[ei].y;
            if (visited_y[y]) continue;
            visited_y[y] = 1;
            if (match_y[y] < 0 || augment(m.edges[match_y[y]].x)) {
                match_x[x] = ei;
                match_y[y] = ei;
                return true;
            }
        }
        return false;
    }

    std::vector<int> run() {
        for (int x = 1; x <= m.x_count; ++x) {
            if (match_x[x] >= 0 || adj[x].empty()) continue;
            std::fill(visited_y.begin(), visited_y.end(), 0);
            augment(x);
        }
        std::vector<int> result;
        for (int x = 1; x <= m.x_count; ++x)
            if (match_x[x] >= 0) result.push_back(match_x[x]);
        return result;
    }
};

}  // namespace

std::vector<int> maximum_matching(const BipartiteMultigraph& m) {
    std::vector<char> available(m.edges.size(), 1);
    return Matcher(m, available).run();
}

std::vector<std::vector<int>> one_factorization(const BipartiteMultigraph& m) {
    if (m.edges.empty())
        throw std::invalid_argument("one_factorization: empty multigraph");
    if (m.x_count != m.y_count)
        throw std::invalid_argument("one_factorization: parts differ in size");
    int r = static_cast<int>(m.edges.size()) / m.x_count;
    if (!m.is_regular(r))
        throw std::invalid_argument("one_factorization: multigraph not regular");

    std::vector<char> available(m.edges.size(), 1);
    std::vector<std::vector<int>> factors;
    for (int round = 0; round < r; ++round) {
        std::vector<int> matching = Matcher(m, available).run();
        // Regularity guarantees a perfect matching in every round (Hall).
        if (static_cast<int>(matching.size()) != m.x_count)
            throw std::logic_error("one_factorization: no perfect matching found");
        for (int ei : matching) available[ei] = 0;
        factors.push_back(std::move(matching));
    }
    return factors;
}

EdgeColoring factorization_coloring(const BipartiteGraph& g, int r) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("factorization_coloring: empty edge set");
    BipartiteMultigraph m = regularize(g, r);
    auto factors = one_factorization(m);
    EdgeColoring c{r, std::vector<int>(g.edge_count(), 0)};
    for (int color = 1; color <= r; ++color)
        for (int ei : factors[color - 1])
            if (m.edges[ei].origin >= 0) c.colors[m.edges[ei].origin] = color;
    return c;
}

}  // namespace ivec
