#ifndef IVEC_SOLVER_HPP
#define IVEC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivec/coloring.hpp"
#include "ivec/graph.hpp"

namespace ivec {

struct SearchBudget {
    std::int64_t max_nodes = 50'000'000;
    int max_t = 64;
    double time_limit_s = 0;  // 0 = no wall-clock limit
};

enum class Verdict { Feasible, Infeasible, Unknown };

const char* verdict_name(Verdict v);

struct FeasibilityResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<EdgeColoring> witness;  // set iff Feasible
    std::int64_t nodes = 0;
};

/// Exhaustive search for a proper, surjective t-coloring interval on the
/// chosen side. Infeasible is reported only on full exhaustion; budget
/// exhaustion yields Unknown. Deterministic; `jobs` > 1 splits the search on
/// the first edge's color with a deterministic merge.
FeasibilityResult feasible(const BipartiteGraph& g, Side side, int t,
                           const SearchBudget& budget = {}, int jobs = 1);

struct ExactResult {
    Verdict verdict = Verdict::Unknown;
    int value = 0;                        // valid iff Feasible
    std::optional<EdgeColoring> witness;  // valid iff Feasible
    // Bracketing interval [lower, upper] established so far; on success
    // lower == value.
    int lower = 0;
    int upper = 0;
    std::int64_t nodes = 0;
};

/// Least t admitting a coloring as above, scanning t upward from the maximum
/// degree. Theorem-level existence at t = |E| keeps the scan finite.
ExactResult exact_min_width(const BipartiteGraph& g, Side side,
                            const SearchBudget& budget = {}, int jobs = 1);

/// Per-t verdicts over an inclusive range.
std::vector<std::pair<int, Verdict>> feasibility_profile(
    const BipartiteGraph& g, Side side, int t_lo, int t_hi,
    const SearchBudget& budget = {}, int jobs = 1);

}  // namespace ivec

#endif
