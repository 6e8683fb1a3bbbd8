#include <doctest.h>

#include "corpus.hpp"
#include "wmkcis/hfree.hpp"

using namespace wmkcis;

TEST_CASE("find_induced_p5 basics") {
    auto w = find_induced_p5(corpus::path_graph(5));
    REQUIRE(w.has_value());
    CHECK(w->path_vertices == std::array<int, 5>{0, 1, 2, 3, 4});

    CHECK(!find_induced_p5(corpus::cycle_graph(5)).has_value());

    auto w6 = find_induced_p5(corpus::path_graph(6));
    REQUIRE(w6.has_value());
    CHECK(witness_is_valid(corpus::path_graph(6), *w6, 0));
}

TEST_CASE("check_free spec cases") {
    WeightedGraph p5k1 = corpus::disjoint_union(corpus::path_graph(5), corpus::path_graph(1));
    auto w = check_free(p5k1, 1);
    REQUIRE(w.has_value());
    CHECK(witness_is_valid(p5k1, *w, 1));

    WeightedGraph c5k1 = corpus::disjoint_union(corpus::cycle_graph(5), corpus::path_graph(1));
    CHECK(!check_free(c5k1, 1).has_value());

    // P5 plus a vertex adjacent to the whole path leaves no companion
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                          {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    WeightedGraph dominated(6, e);
    CHECK(!check_free(dominated, 1).has_value());
    CHECK(!corpus::naive_contains_p5rk1(dominated, 1));
    CHECK(check_free(dominated, 0).has_value());
}

TEST_CASE("check_free agrees with the naive subset scan") {
    for (int n = 1; n <= 6; ++n)
        for (const WeightedGraph& g : corpus::all_graphs(n))
            for (int r = 0; r <= 2; ++r) {
                auto w = check_free(g, r);
                CHECK(w.has_value() == corpus::naive_contains_p5rk1(g, r));
                if (w) CHECK(witness_is_valid(g, *w, r));
            }
    // randomized n = 7, 8
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 7 + static_cast<int>(corpus::rng_below(rng, 2));
        WeightedGraph g = corpus::random_graph(n, 0.2 + 0.1 * (rep % 6), rng);
        for (int r = 0; r <= 1; ++r) {
            auto w = check_free(g, r);
            CHECK(w.has_value() == corpus::naive_contains_p5rk1(g, r));
            if (w) CHECK(witness_is_valid(g, *w, r));
        }
    }
}

TEST_CASE("freeness is closed under edge contraction") {
    std::mt19937_64 rng(5150);
    int checked = 0;
    for (int rep = 0; rep < 60 && checked < 120; ++rep) {
        int r = rep % 2;
        WeightedGraph g = corpus::random_free_graph(7, r, rng);
        for (int u = 0; u < g.n() && checked < 120; ++u)
            for (int v = u + 1; v < g.n() && checked < 120; ++v) {
                if (!g.adjacent(u, v)) continue;
                CHECK(!check_free(contract_edge(g, u, v), r).has_value());
                ++checked;
            }
    }
    CHECK(checked > 50);
}

TEST_CASE("freeness is hereditary") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 25; ++rep) {
        int r = rep % 2;
        WeightedGraph g = corpus::random_free_graph(8, r, rng);
        for (int drop = 0; drop < g.n(); ++drop) {
            VertexSet keep = g.all_vertices();
            keep.reset(drop);
            CHECK(!check_free(induced_subgraph(g, keep).graph, r).has_value());
        }
    }
}
