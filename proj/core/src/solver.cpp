#include "ivec/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <stdexcept>

namespace ivec {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::Infeasible: return "infeasible";
        default: return "unknown";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over edges grouped by side vertex, colors tried in
// ascending order. Pruning:
//   (a) properness: per-vertex used-color masks,
//   (b) interval on the side: the color span at a side vertex never exceeds
//       its degree, and equals it once the vertex is fully colored,
//   (c) surjectivity: colors still missing <= edges still uncolored.
// No color-symmetry breaking: interval-ness is not invariant under color
// permutation, so exhaustion must cover the raw space.
struct Search {
    const BipartiteGraph& g;
    Side side;
    int t;
    std::int64_t max_nodes;
    Clock::time_point deadline;
    bool has_deadline;

    std::vector<int> order;       // edge ids, grouped by side vertex
    std::vector<std::uint64_t> used_x, used_y;
    std::vector<int> cur_min, cur_max, assigned;  // per side vertex
    std::vector<int> color_count;                 // per color, global
    int colors_used = 0;
    std::vector<int> colors;  // per edge id
    std::int64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<EdgeColoring> witness;
    int first_color_lo = 1, first_color_hi = 0;  // restriction on order[0]

    Search(const BipartiteGraph& graph, Side s, int colors_total,
           const SearchBudget& budget)
        : g(graph), side(s), t(colors_total), max_nodes(budget.max_nodes) {
        has_deadline = budget.time_limit_s > 0;
        if (has_deadline)
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.time_limit_s));
        order.resize(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.endpoint(a, side) < g.endpoint(b, side);
        });
        used_x.assign(g.x_count() + 1, 0);
        used_y.assign(g.y_count() + 1, 0);
        cur_min.assign(g.part_size(side) + 1, 0);
        cur_max.assign(g.part_size(side) + 1, 0);
        assigned.assign(g.part_size(side) + 1, 0);
        color_count.assign(t + 1, 0);
        colors.assign(g.edge_count(), 0);
        first_color_hi = t;
    }

    bool budget_hit() {
        if (nodes >= max_nodes) return true;
        if (has_deadline && (nodes & 0xFFF) == 0 && Clock::now() >= deadline)
            return true;
        return false;
    }

    // Returns true when a witness was found.
    bool run(int pos) {
        if (pos == g.edge_count()) {
            if (colors_used == t) {
                witness = EdgeColoring{t, colors};
                return true;
            }
            return false;
        }
        int ei = order[pos];
        const Edge& e = g.edge(ei);
        int sv = side == Side::X ? e.x : e.y;
        int deg = g.degree(side, sv);
        int remaining = g.edge_count() - pos;
        int lo = pos == 0 ? first_color_lo : 1;
        int hi = pos == 0 ? first_color_hi : t;
        for (int c = lo; c <= hi; ++c) {
            ++nodes;
            if (budget_hit()) {
                out_of_budget = true;
                return false;
            }
            std::uint64_t bit = std::uint64_t{1} << c;
            if ((used_x[e.x] & bit) || (used_y[e.y] & bit)) continue;

            int nmin = assigned[sv] ? std::min(cur_min[sv], c) : c;
            int nmax = assigned[sv] ? std::max(cur_max[sv], c) : c;
            if (nmax - nmin + 1 > deg) continue;
            if (assigned[sv] + 1 == deg && nmax - nmin + 1 != deg) continue;

            int new_used = colors_used + (color_count[c] == 0 ? 1 : 0);
            if (t - new_used > remaining - 1) continue;

            int omin = cur_min[sv], omax = cur_max[sv];
            used_x[e.x] |= bit;
            used_y[e.y] |= bit;
            cur_min[sv] = nmin;
            cur_max[sv] = nmax;
            ++assigned[sv];
            ++color_count[c];
            colors_used = new_used;
            colors[ei] = c;

            if (run(pos + 1)) return true;

            colors[ei] = 0;
            colors_used -= (color_count[c] == 1 ? 1 : 0);
            --color_count[c];
            --assigned[sv];
            cur_min[sv] = omin;
            cur_max[sv] = omax;
            used_x[e.x] &= ~bit;
            used_y[e.y] &= ~bit;
            if (out_of_budget) return false;
        }
        return false;
    }
};

FeasibilityResult solve_branch(const BipartiteGraph& g, Side side, int t,
                               const SearchBudget& budget, int c_lo, int c_hi) {
    Search s(g, side, t, budget);
    s.first_color_lo = c_lo;
    s.first_color_hi = c_hi;
    FeasibilityResult r;
    bool found = s.run(0);
    r.nodes = s.nodes;
    if (found) {
        r.verdict = Verdict::Feasible;
        r.witness = std::move(s.witness);
    } else {
        r.verdict = s.out_of_budget ? Verdict::Unknown : Verdict::Infeasible;
    }
    return r;
}

}  // namespace

FeasibilityResult feasible(const BipartiteGraph& g, Side side, int t,
                           const SearchBudget& budget, int jobs) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("feasible: empty edge set");
    if (t < 1) throw std::invalid_argument("feasible: t must be positive");
    if (t > 62 || t > budget.max_t)
        return FeasibilityResult{Verdict::Unknown, std::nullopt, 0};
    if (t > g.edge_count())  // surjectivity is impossible
        return FeasibilityResult{Verdict::Infeasible, std::nullopt, 0};

    if (jobs <= 1 || t == 1) return solve_branch(g, side, t, budget, 1, t);

    // Split on the first edge's color; the least feasible branch carries the
    // same witness the sequential search would return first.
    std::vector<std::future<FeasibilityResult>> futures;
    for (int c = 1; c <= t; ++c)
        futures.push_back(std::async(std::launch::async, [&, c] {
            return solve_branch(g, side, t, budget, c, c);
        }));
    FeasibilityResult merged;
    merged.verdict = Verdict::Infeasible;
    for (auto& f : futures) {
        FeasibilityResult r = f.get();
        merged.nodes += r.nodes;
        if (r.verdict == Verdict::Feasible && !merged.witness) {
            merged.verdict = Verdict::Feasible;
            merged.witness = std::move(r.witness);
        } else if (r.verdict == Verdict::Unknown &&
                   merged.verdict == Verdict::Infeasible) {
            merged.verdict = Verdict::Unknown;
        }
    }
    return merged;
}

ExactResult exact_min_width(const BipartiteGraph& g, Side side,
                            const SearchBudget& budget, int jobs) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("exact_min_width: empty edge set");
    ExactResult result;
    result.lower = std::max(1, g.max_degree());
    result.upper = g.edge_count();
    for (int t = result.lower; t <= g.edge_count(); ++t) {
        FeasibilityResult r = feasible(g, side, t, budget, jobs);
        result.nodes += r.nodes;
        if (r.verdict == Verdict::Feasible) {
            result.verdict = Verdict::Feasible;
            result.value = t;
            result.lower = t;
            result.upper = t;
            result.witness = std::move(r.witness);
            return result;
        }
        if (r.verdict == Verdict::Unknown) {
            result.verdict = Verdict::Unknown;
            result.lower = t;
            return result;
        }
        result.lower = t + 1;
    }
    // Unreachable for one full part: t = |E| is always feasible.
    result.verdict = Verdict::Infeasible;
    return result;
}

std::vector<std::pair<int, Verdict>> feasibility_profile(
    const BipartiteGraph& g, Side side, int t_lo, int t_hi,
    const SearchBudget& budget, int jobs) {
    if (t_lo < 1 || t_hi < t_lo)
        throw std::invalid_argument("feasibility_profile: bad range");
    std::vector<std::pair<int, Verdict>> out;
    for (int t = t_lo; t <= t_hi; ++t)
        out.emplace_back(t, feasible(g, side, t, budget, jobs).verdict);
    return out;
}

}  // namespace ivec
