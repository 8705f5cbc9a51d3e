#ifndef IVEC_COLORING_HPP
#define IVEC_COLORING_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ivec/graph.hpp"

namespace ivec {

/// Total edge coloring candidate: colors[i] in [1,t] for edge i of the
/// companion graph, in canonical edge order. Whether it is proper, surjective
/// or interval is decided by the checks below, not by the type.
struct EdgeColoring {
    int t = 0;
    std::vector<int> colors;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Sorted, deduplicated set of colors at one vertex.
struct Spectrum {
    std::vector<int> colors;

    bool empty() const { return colors.empty(); }
    int size() const { return static_cast<int>(colors.size()); }
    int min() const { return colors.front(); }
    int max() const { return colors.back(); }

    /// Consecutive-integer test: max - min + 1 == count.
    bool is_interval() const {
        return !colors.empty() && colors.back() - colors.front() + 1 == size();
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum spectrum(const BipartiteGraph& g, const EdgeColoring& c, Side s, int v);

bool is_interval_at(const BipartiteGraph& g, const EdgeColoring& c, Side s, int v);
bool is_interval_on(const BipartiteGraph& g, const EdgeColoring& c, Side s);
/// Spectrum equals [1, d(v)] exactly.
bool is_persistent_interval_at(const BipartiteGraph& g, const EdgeColoring& c,
                               Side s, int v);

enum class CheckMode { Interval, Persistent };

struct CheckResult {
    std::string name;
    bool passed;
    std::string witness;  // empty when passed
};

/// All checks are always run; `passed` is their conjunction.
struct VerificationReport {
    bool passed = false;
    std::vector<CheckResult> checks;
};

/// Properness ("no two adjacent edges receive the same color") plus
/// surjectivity onto [1,t] ("all colors are used"). Witnesses name the edge
/// pair / the least missing color.
VerificationReport is_proper(const BipartiteGraph& g, const EdgeColoring& c);

/// is_proper plus the per-vertex interval (or persistent-interval) check on
/// the chosen part.
VerificationReport verify(const BipartiteGraph& g, const EdgeColoring& c,
                          Side side, CheckMode mode = CheckMode::Interval);

/// Chromatic index of a biregular graph (the larger of the two uniform
/// degrees). Throws std::invalid_argument on non-biregular input.
int chromatic_index_biregular(const BipartiteGraph& g);

// Text format:
//   coloring <t>
//   c <x> <y> <color>   (one line per edge of the companion graph)
// Rejects edges absent from the graph, duplicates, colors outside [1,t],
// and missing edges.
EdgeColoring parse_coloring(std::istream& in, const BipartiteGraph& g);
EdgeColoring parse_coloring(const std::string& text, const BipartiteGraph& g);
std::string emit_coloring(const BipartiteGraph& g, const EdgeColoring& c);

}  // namespace ivec

#endif
