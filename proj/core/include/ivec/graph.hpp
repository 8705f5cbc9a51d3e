#ifndef IVEC_GRAPH_HPP
#define IVEC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ivec/errors.hpp"

namespace ivec {

/// One edge of a bipartite graph; endpoints are 1-based indices into the X
/// and Y parts respectively.
struct Edge {
    int x;
    int y;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
inline const char* side_name(Side s) { return s == Side::X ? "X" : "Y"; }

/// Simple bipartite graph on parts X = {1..m} and Y = {1..n}. Edges are kept
/// in canonical order (x-major, then y ascending); all iteration and output
/// follow that order, so anything built on top is deterministic.
///
/// Immutable after construction.
class BipartiteGraph {
public:
    BipartiteGraph(int m, int n, std::vector<Edge> edges);

    int x_count() const { return m_; }
    int y_count() const { return n_; }
    int part_size(Side s) const { return s == Side::X ? m_ : n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }

    int degree(Side s, int v) const;
    int degree_x(int x) const { return degree(Side::X, x); }
    int degree_y(int y) const { return degree(Side::Y, y); }
    int max_degree() const;
    int max_degree(Side s) const;
    int min_degree(Side s) const;

    bool has_edge(int x, int y) const { return edge_index(x, y) >= 0; }
    /// Position of (x,y) in canonical order, or -1 when absent.
    int edge_index(int x, int y) const;

    /// Ascending neighbor lists.
    const std::vector<int>& neighbors(Side s, int v) const;
    /// Edge indices incident to vertex v of side s, in canonical order.
    const std::vector<int>& incident_edges(Side s, int v) const;

    int endpoint(int edge_index, Side s) const {
        const Edge& e = edges_[edge_index];
        return s == Side::X ? e.x : e.y;
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int m_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_x_, adj_y_;        // neighbor vertex ids
    std::vector<std::vector<int>> inc_x_, inc_y_;        // incident edge ids
};

/// Swap the two parts (edges (x,y) become (y,x)).
BipartiteGraph transpose(const BipartiteGraph& g);

/// Membership record for the biregular class: |X| = m vertices of degree l,
/// |Y| = n vertices of degree k, oriented so that m >= n. `parts_swapped` is
/// set when the graph's stored Y part plays the role of X here.
struct BiregularSignature {
    int m = 0;
    int l = 0;
    int n = 0;
    int k = 0;
    bool parts_swapped = false;

    friend bool operator==(const BiregularSignature&, const BiregularSignature&) = default;
};

BipartiteGraph complete_bipartite(int m, int n);

/// Cycle on 2s vertices, X = odd positions, Y = even positions. Member of
/// Bip(s,2,s,2).
BipartiteGraph even_cycle(int s);

/// Uniform per-side degrees of the graph as stored: (l, k) with every
/// X-degree l and every Y-degree k. Empty parts or mixed degrees -> nullopt.
std::optional<std::pair<int, int>> uniform_degrees(const BipartiteGraph& g);

/// Classify into Bip(m,l,n,k), orienting the larger part as X.
std::optional<BiregularSignature> classify_biregular(const BipartiteGraph& g);

/// Seed-deterministic biregular instance: stub matching plus random 2-edge
/// swaps to repair duplicates. Throws GenerationError if the bounded retry
/// budget runs out (does not happen for feasible signatures in practice).
BipartiteGraph random_biregular(int m, int l, int n, int k, std::uint64_t seed);

/// Induced subgraph together with the index remapping back into the host
/// graph (1-based sub index -> original index per part).
struct InducedSubgraph {
    BipartiteGraph graph;
    std::vector<int> x_map;
    std::vector<int> y_map;
};

InducedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 const std::vector<int>& x_subset,
                                 const std::vector<int>& y_subset);

// Text format:
//   bipartite <m> <n> <edge_count>
//   e <x> <y>          (edge_count lines)
// '#' begins a comment line. emit writes canonical order; parse accepts any
// order but rejects duplicates and out-of-range endpoints.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph(const std::string& text);
std::string emit_graph(const BipartiteGraph& g);

}  // namespace ivec

#endif
