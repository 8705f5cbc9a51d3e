#include "doctest.h"
#include "ivec/coloring.hpp"
#include "ivec/factorization.hpp"
#include "ivec/graph.hpp"

using namespace ivec;

namespace {

// K_{2,2} with the proper 2-coloring x1y1->1, x1y2->2, x2y1->2, x2y2->1.
EdgeColoring k22_coloring() { return EdgeColoring{2, {1, 2, 2, 1}}; }

}  // namespace

TEST_CASE("spectrum read-off") {
    auto g = complete_bipartite(2, 2);
    auto c = k22_coloring();
    CHECK(spectrum(g, c, Side::X, 1).colors == std::vector<int>{1, 2});
    CHECK(spectrum(g, c, Side::Y, 2).colors == std::vector<int>{1, 2});

    auto k11 = complete_bipartite(1, 1);
    CHECK(spectrum(k11, EdgeColoring{1, {1}}, Side::X, 1).colors ==
          std::vector<int>{1});

    CHECK_THROWS_AS(spectrum(g, c, Side::X, 3), std::invalid_argument);
}

TEST_CASE("is_proper") {
    auto g = complete_bipartite(2, 2);
    CHECK(is_proper(g, k22_coloring()).passed);

    // both edges at x1 colored 1
    auto bad = is_proper(g, EdgeColoring{2, {1, 1, 2, 1}});
    CHECK_FALSE(bad.passed);
    bool saw_witness = false;
    for (const auto& check : bad.checks)
        if (check.name == "proper" && !check.passed) {
            saw_witness = check.witness.find("x1y1") != std::string::npos &&
                          check.witness.find("x1y2") != std::string::npos;
        }
    CHECK(saw_witness);

    // t=3 but only colors {1,2} used
    auto gap = is_proper(g, EdgeColoring{3, {1, 2, 2, 1}});
    CHECK_FALSE(gap.passed);
    for (const auto& check : gap.checks)
        if (check.name == "surjective") {
            CHECK_FALSE(check.passed);
            CHECK(check.witness.find("3") != std::string::npos);
        }
}

TEST_CASE("interval and persistent predicates") {
    CHECK(Spectrum{{2, 3, 4}}.is_interval());
    CHECK_FALSE(Spectrum{{1, 3}}.is_interval());

    auto star = BipartiteGraph(1, 3, {{1, 1}, {1, 2}, {1, 3}});
    EdgeColoring anchored{3, {1, 2, 3}};
    CHECK(is_persistent_interval_at(star, anchored, Side::X, 1));
    EdgeColoring shifted{4, {2, 3, 4}};
    CHECK(is_interval_at(star, shifted, Side::X, 1));
    CHECK_FALSE(is_persistent_interval_at(star, shifted, Side::X, 1));

    auto k11 = complete_bipartite(1, 1);
    CHECK(is_persistent_interval_at(k11, EdgeColoring{1, {1}}, Side::X, 1));
}

TEST_CASE("verify modes and tampering") {
    auto g = even_cycle(3);
    EdgeColoring c = factorization_coloring(g, 2);
    CHECK(verify(g, c, Side::X, CheckMode::Interval).passed);
    CHECK(verify(g, c, Side::X, CheckMode::Persistent).passed);

    // duplicate a color at a Y-vertex
    EdgeColoring tampered = c;
    for (int ei : g.incident_edges(Side::Y, 1))
        tampered.colors[ei] = 1;
    auto report = verify(g, tampered, Side::X, CheckMode::Interval);
    CHECK_FALSE(report.passed);

    // interval but not persistent
    auto star = BipartiteGraph(1, 3, {{1, 1}, {1, 2}, {1, 3}});
    EdgeColoring shifted{4, {2, 3, 4}};
    CHECK_FALSE(verify(star, shifted, Side::X, CheckMode::Persistent).passed);
}

TEST_CASE("properness gives full-size spectra") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = random_biregular(6, 2, 4, 3, seed);
        EdgeColoring c = factorization_coloring(g, g.max_degree());
        REQUIRE(is_proper(g, c).passed);
        for (Side s : {Side::X, Side::Y})
            for (int v = 1; v <= g.part_size(s); ++v)
                CHECK(spectrum(g, c, s, v).size() == g.degree(s, v));
    }
}

TEST_CASE("X spectra are invariant under Y relabeling") {
    auto g = random_biregular(6, 2, 4, 3, 3);
    EdgeColoring c = factorization_coloring(g, 3);
    REQUIRE(is_proper(g, c).passed);

    // reverse the Y indices
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> recolored;
    for (int i = 0; i < g.edge_count(); ++i) {
        Edge e{g.edge(i).x, g.y_count() + 1 - g.edge(i).y};
        edges.push_back(e);
        recolored.emplace_back(e, c.colors[i]);
    }
    BipartiteGraph h(g.x_count(), g.y_count(), edges);
    EdgeColoring ch{c.t, std::vector<int>(h.edge_count(), 0)};
    for (auto& [e, col] : recolored) ch.colors[h.edge_index(e.x, e.y)] = col;
    CHECK(is_proper(h, ch).passed);
    for (int x = 1; x <= g.x_count(); ++x)
        CHECK(spectrum(h, ch, Side::X, x) == spectrum(g, c, Side::X, x));
}

TEST_CASE("chromatic_index_biregular") {
    CHECK(chromatic_index_biregular(complete_bipartite(7, 3)) == 7);
    CHECK(chromatic_index_biregular(even_cycle(3)) == 2);
    CHECK(chromatic_index_biregular(complete_bipartite(1, 1)) == 1);
    BipartiteGraph broken(2, 2, {{1, 1}, {1, 2}, {2, 1}});
    CHECK_THROWS_AS(chromatic_index_biregular(broken), std::invalid_argument);
}

TEST_CASE("coloring text round trip and errors") {
    auto g = complete_bipartite(2, 2);
    auto c = k22_coloring();
    CHECK(parse_coloring(emit_coloring(g, c), g) == c);

    CHECK_THROWS_AS(parse_coloring("coloring 2\nc 1 1 1\n", g), ParseError);
    CHECK_THROWS_AS(
        parse_coloring("coloring 2\nc 1 1 1\nc 1 2 2\nc 2 1 2\nc 2 3 1\n", g),
        ParseError);
    CHECK_THROWS_AS(
        parse_coloring("coloring 2\nc 1 1 3\nc 1 2 2\nc 2 1 2\nc 2 2 1\n", g),
        ParseError);
    CHECK_THROWS_AS(
        parse_coloring("coloring 2\nc 1 1 1\nc 1 1 2\nc 2 1 2\nc 2 2 1\n", g),
        ParseError);
}
