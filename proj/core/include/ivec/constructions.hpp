#ifndef IVEC_CONSTRUCTIONS_HPP
#define IVEC_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "ivec/coloring.hpp"
#include "ivec/graph.hpp"
#include "ivec/solver.hpp"

namespace ivec {

/// One block of the X-part partition: l consecutive X-vertices (the last
/// block may be smaller), their joint neighborhood, and the induced subgraph
/// with its index remapping.
struct Block {
    std::vector<int> x_vertices;
    std::vector<int> y_vertices;
    InducedSubgraph sub;
};

/// Partition X into ceil(m/l) consecutive slices of size l and induce one
/// subgraph per slice. Within each block every x keeps its full degree l and
/// every y has degree at most l. Requires uniform per-side degrees.
std::vector<Block> block_partition(const BipartiteGraph& g);

/// Proper coloring with t = max degree whose X-spectra are exactly
/// [1, d(x)]. Requires max Y-degree <= min X-degree. Uniform X-degrees go
/// through regularization + 1-factorization; mixed X-degrees are colored by
/// descending per-color matchings that saturate every vertex of full
/// remaining degree.
EdgeColoring persistent_interval_coloring(const BipartiteGraph& g);

/// Same contract with the roles of the parts chosen by `side`.
EdgeColoring persistent_interval_coloring_on(const BipartiteGraph& g, Side side);

/// Block construction: color block r with a persistent-interval coloring
/// shifted into the color window [(r-1)l+1, rl]. The result is proper,
/// surjective onto [1, l*ceil(m/l)] and interval on X (side X; transposed
/// internally for side Y). Requires a biregular graph.
EdgeColoring block_interval_coloring(const BipartiteGraph& g, Side side = Side::X);

/// Exact minimum color count for a coloring of K_{m,n} interval on one full
/// part R: (m+n-|R|) * ceil(|R|/(m+n-|R|)).
int kmn_min_width(int m, int n, Side side);

/// All-distinct coloring with t = |E|: side vertices in index order, each
/// one's incident edges a consecutive color run.
EdgeColoring max_coloring(const BipartiteGraph& g, Side side);

/// Admissible t-range for interval-on-side colorings of a biregular graph:
/// upper end is always (side size) * (side degree); the lower end is the
/// side degree when the side is the smaller part, d * ceil(size/d) otherwise.
std::pair<int, int> side_range(const BipartiteGraph& g, Side side);

/// Coloring with exactly t colors, interval on the chosen side, for any t in
/// side_range. Staircase window heuristic first, exact-solver search as the
/// fallback. Throws std::invalid_argument when t is out of range,
/// BudgetError when the fallback runs out of budget, ConstructionError when
/// the solver certifies infeasibility (which would contradict the range
/// guarantee and signals a bug).
EdgeColoring range_coloring(const BipartiteGraph& g, Side side, int t,
                            const SearchBudget& budget = {});

}  // namespace ivec

#endif
