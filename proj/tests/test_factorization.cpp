#include <set>

#include "doctest.h"
#include "ivec/coloring.hpp"
#include "ivec/factorization.hpp"
#include "ivec/graph.hpp"

using namespace ivec;

namespace {

// Exhaustive post-hoc check: r factors, pairwise disjoint, union covers the
// edge list, each saturating every vertex exactly once.
void check_factorization(const BipartiteMultigraph& m,
                         const std::vector<std::vector<int>>& factors, int r) {
    REQUIRE(static_cast<int>(factors.size()) == r);
    std::set<int> seen;
    for (const auto& f : factors) {
        std::vector<int> hit_x(m.x_count + 1, 0), hit_y(m.y_count + 1, 0);
        for (int ei : f) {
            CHECK(seen.insert(ei).second);
            ++hit_x[m.edges[ei].x];
            ++hit_y[m.edges[ei].y];
        }
        for (int x = 1; x <= m.x_count; ++x) CHECK(hit_x[x] == 1);
        for (int y = 1; y <= m.y_count; ++y) CHECK(hit_y[y] == 1);
    }
    CHECK(seen.size() == m.edges.size());
}

}  // namespace

TEST_CASE("regularize") {
    SUBCASE("already regular: zero dummies") {
        auto c4 = even_cycle(2);
        auto m = regularize(c4, 2);
        CHECK(m.edges.size() == 4);
        for (const auto& e : m.edges) CHECK(e.origin >= 0);
    }
    SUBCASE("single edge to degree 2") {
        BipartiteGraph path(1, 1, {{1, 1}});
        auto m = regularize(path, 2);
        CHECK(m.is_regular(2));
        int real = 0;
        for (const auto& e : m.edges) real += e.origin >= 0;
        CHECK(real == 1);
    }
    SUBCASE("K_{7,3} to degree 7 balances deficiencies") {
        auto g = complete_bipartite(7, 3);
        auto m = regularize(g, 7);
        CHECK(m.x_count == 7);
        CHECK(m.y_count == 7);
        CHECK(m.is_regular(7));
        // real edges biject with E(G)
        std::set<int> origins;
        for (const auto& e : m.edges)
            if (e.origin >= 0) CHECK(origins.insert(e.origin).second);
        CHECK(origins.size() == 21);
    }
    SUBCASE("r below max degree rejected") {
        CHECK_THROWS_AS(regularize(complete_bipartite(3, 3), 2),
                        std::invalid_argument);
    }
}

TEST_CASE("one_factorization") {
    SUBCASE("C4 splits into its two diagonal pairs") {
        auto m = regularize(even_cycle(2), 2);
        auto factors = one_factorization(m);
        check_factorization(m, factors, 2);
    }
    SUBCASE("K33") {
        auto m = regularize(complete_bipartite(3, 3), 3);
        auto factors = one_factorization(m);
        check_factorization(m, factors, 3);
    }
    SUBCASE("1-regular graph is its own factor") {
        BipartiteGraph g(2, 2, {{1, 1}, {2, 2}});
        auto m = regularize(g, 1);
        auto factors = one_factorization(m);
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].size() == 2);
    }
    SUBCASE("non-regular input rejected") {
        BipartiteMultigraph m{2, 2, {{1, 1, 0}, {1, 2, 1}, {2, 1, 2}, {2, 2, 3}, {1, 1, -1}}};
        CHECK_THROWS_AS(one_factorization(m), std::invalid_argument);
    }
}

TEST_CASE("factorization over random instances") {
    struct Sig { int m, l, n, k; };
    const Sig sigs[] = {{4, 3, 4, 3}, {6, 2, 4, 3}, {5, 2, 5, 2}, {8, 2, 4, 4}};
    for (const Sig& s : sigs)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto g = random_biregular(s.m, s.l, s.n, s.k, seed);
            int r = g.max_degree();
            auto m = regularize(g, r);
            check_factorization(m, one_factorization(m), r);

            EdgeColoring c = factorization_coloring(g, r);
            CHECK(is_proper(g, c).passed);
        }
}

TEST_CASE("equal X-degrees make the restricted coloring persistent on X") {
    // every x sits in every matching through a real edge
    auto g = transpose(random_biregular(6, 2, 4, 3, 11));  // X-degrees all 3
    EdgeColoring c = factorization_coloring(g, 3);
    CHECK(verify(g, c, Side::X, CheckMode::Persistent).passed);
}

TEST_CASE("factorization is deterministic") {
    auto g = random_biregular(6, 3, 6, 3, 5);
    CHECK(factorization_coloring(g, 3) == factorization_coloring(g, 3));
}
