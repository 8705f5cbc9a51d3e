#ifndef IVEC_FACTORIZATION_HPP
#define IVEC_FACTORIZATION_HPP

#include <vector>

#include "ivec/coloring.hpp"
#include "ivec/graph.hpp"

namespace ivec {

/// Edge of a regularized multigraph. `origin` is the canonical edge index in
/// the source graph, or -1 for a dummy edge added during regularization.
struct MultiEdge {
    int x;
    int y;
    int origin;
};

/// Bipartite multigraph used transiently during regularization. Parts may be
/// padded beyond the source graph's part sizes; padded vertices carry only
/// dummy edges.
struct BipartiteMultigraph {
    int x_count = 0;
    int y_count = 0;
    std::vector<MultiEdge> edges;

    int degree(Side s, int v) const;
    bool is_regular(int r) const;
};

/// Pad parts to equal size and add dummy edges (parallel edges allowed)
/// between the first deficient vertices until every vertex has degree r.
/// Real edges are kept untouched. Requires r >= max degree of g.
BipartiteMultigraph regularize(const BipartiteGraph& g, int r);

/// Decompose an r-regular bipartite multigraph into r perfect matchings.
/// Returns r lists of edge indices into M.edges; deterministic for a fixed
/// edge order. Throws std::invalid_argument on non-regular input.
std::vector<std::vector<int>> one_factorization(const BipartiteMultigraph& m);

/// A maximum matching of the multigraph saturating the X side if one exists
/// (augmenting paths, vertices scanned in index order). Returns edge indices.
std::vector<int> maximum_matching(const BipartiteMultigraph& m);

/// Proper coloring of g with t = r: regularize, factorize, color each real
/// edge by its matching index. If every X-degree equals r the result is
/// persistent-interval on X.
EdgeColoring factorization_coloring(const BipartiteGraph& g, int r);

}  // namespace ivec

#endif
