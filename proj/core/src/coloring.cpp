#include "ivec/coloring.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ivec {

namespace {

void require_total(const BipartiteGraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring does not cover all edges");
}

std::string edge_str(const Edge& e) {
    return "x" + std::to_string(e.x) + "y" + std::to_string(e.y);
}

}  // namespace

Spectrum spectrum(const BipartiteGraph& g, const EdgeColoring& c, Side s, int v) {
    require_total(g, c);
    std::vector<int> colors;
    for (int ei : g.incident_edges(s, v)) colors.push_back(c.colors[ei]);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return Spectrum{std::move(colors)};
}

bool is_interval_at(const BipartiteGraph& g, const EdgeColoring& c, Side s, int v) {
    return spectrum(g, c, s, v).is_interval();
}

bool is_interval_on(const BipartiteGraph& g, const EdgeColoring& c, Side s) {
    for (int v = 1; v <= g.part_size(s); ++v)
        if (g.degree(s, v) > 0 && !is_interval_at(g, c, s, v)) return false;
    return true;
}

bool is_persistent_interval_at(const BipartiteGraph& g, const EdgeColoring& c,
                               Side s, int v) {
    Spectrum sp = spectrum(g, c, s, v);
    return !sp.empty() && sp.min() == 1 && sp.max() == g.degree(s, v) &&
           sp.size() == g.degree(s, v);
}

VerificationReport is_proper(const BipartiteGraph& g, const EdgeColoring& c) {
    require_total(g, c);
    VerificationReport report;

    CheckResult range{"color-range", true, ""};
    for (int i = 0; i < g.edge_count(); ++i) {
        if (c.colors[i] < 1 || c.colors[i] > c.t) {
            range.passed = false;
            range.witness = edge_str(g.edge(i)) + " has color " +
                            std::to_string(c.colors[i]) + " outside [1," +
                            std::to_string(c.t) + "]";
            break;
        }
    }
    report.checks.push_back(range);

    CheckResult proper{"proper", true, ""};
    for (Side s : {Side::X, Side::Y}) {
        for (int v = 1; v <= g.part_size(s) && proper.passed; ++v) {
            const auto& inc = g.incident_edges(s, v);
            for (std::size_t a = 0; a < inc.size() && proper.passed; ++a)
                for (std::size_t b = a + 1; b < inc.size(); ++b)
                    if (c.colors[inc[a]] == c.colors[inc[b]]) {
                        proper.passed = false;
                        proper.witness = "edges " + edge_str(g.edge(inc[a])) +
                                         " and " + edge_str(g.edge(inc[b])) +
                                         " share color " +
                                         std::to_string(c.colors[inc[a]]);
                        break;
                    }
        }
    }
    report.checks.push_back(proper);

    CheckResult surjective{"surjective", true, ""};
    if (range.passed) {
        std::vector<char> used(c.t + 1, 0);
        for (int col : c.colors) used[col] = 1;
        for (int col = 1; col <= c.t; ++col)
            if (!used[col]) {
                surjective.passed = false;
                surjective.witness = "color " + std::to_string(col) + " unused";
                break;
            }
    }
    report.checks.push_back(surjective);

    report.passed = range.passed && proper.passed && surjective.passed;
    return report;
}

VerificationReport verify(const BipartiteGraph& g, const EdgeColoring& c,
                          Side side, CheckMode mode) {
    VerificationReport report = is_proper(g, c);
    const char* name =
        mode == CheckMode::Interval ? "interval-on-side" : "persistent-on-side";
    CheckResult check{name, true, ""};
    for (int v = 1; v <= g.part_size(side); ++v) {
        if (g.degree(side, v) == 0) continue;
        bool ok = mode == CheckMode::Interval
                      ? is_interval_at(g, c, side, v)
                      : is_persistent_interval_at(g, c, side, v);
        if (!ok) {
            check.passed = false;
            check.witness = std::string(side_name(side)) + std::to_string(v);
            break;
        }
    }
    report.checks.push_back(check);
    report.passed = report.passed && check.passed;
    return report;
}

int chromatic_index_biregular(const BipartiteGraph& g) {
    auto sig = classify_biregular(g);
    if (!sig) throw std::invalid_argument("graph is not biregular");
    return sig->k;
}

EdgeColoring parse_coloring(std::istream& in, const BipartiteGraph& g) {
    std::string raw;
    int line_no = 0;
    auto next = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            auto end = raw.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            out = raw.substr(0, end + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next(line)) throw ParseError(0, "missing header");
    std::istringstream head(line);
    std::string tag;
    int t = 0;
    if (!(head >> tag >> t) || tag != "coloring")
        throw ParseError(line_no, "expected 'coloring <t>'");
    if (t < 1) throw ParseError(line_no, "t must be positive");

    EdgeColoring coloring{t, std::vector<int>(g.edge_count(), 0)};
    std::vector<char> seen(g.edge_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!next(line))
            throw ParseError(0, "missing coloring line: expected " +
                                    std::to_string(g.edge_count()) +
                                    " edges, got " + std::to_string(i));
        std::istringstream es(line);
        int x = 0, y = 0, col = 0;
        if (!(es >> tag >> x >> y >> col) || tag != "c")
            throw ParseError(line_no, "expected 'c <x> <y> <color>'");
        int ei = (x >= 1 && x <= g.x_count() && y >= 1 && y <= g.y_count())
                     ? g.edge_index(x, y)
                     : -1;
        if (ei < 0)
            throw ParseError(line_no, "edge not present in the companion graph");
        if (seen[ei]) throw ParseError(line_no, "duplicate edge line");
        if (col < 1 || col > t)
            throw ParseError(line_no, "color outside [1,t]");
        seen[ei] = 1;
        coloring.colors[ei] = col;
    }
    if (next(line)) throw ParseError(line_no, "trailing content");
    return coloring;
}

EdgeColoring parse_coloring(const std::string& text, const BipartiteGraph& g) {
    std::istringstream in(text);
    return parse_coloring(in, g);
}

std::string emit_coloring(const BipartiteGraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring does not cover all edges");
    std::ostringstream out;
    out << "coloring " << c.t << '\n';
    for (int i = 0; i < g.edge_count(); ++i)
        out << "c " << g.edge(i).x << ' ' << g.edge(i).y << ' ' << c.colors[i]
            << '\n';
    return out.str();
}

}  // namespace ivec
