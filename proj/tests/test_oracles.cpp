#include <doctest.h>

#include "corpus.hpp"
#include "wmkcis/oracles.hpp"

using namespace wmkcis;

TEST_CASE("oracle_wmkcis spec values") {
    ListAssignment two(2, 5);
    ColouredSolution c5 = oracle_wmkcis(corpus::cycle_graph(5), two);
    CHECK(c5.total_weight == 4); // any 4 cycle vertices induce a bipartite P4

    ListAssignment two4(2, 4);
    CHECK(oracle_wmkcis(corpus::complete_graph(4), two4).total_weight == 2);

    WeightedGraph p5 = corpus::with_weights(corpus::path_graph(5), {1, 5, 1, 5, 1});
    ColouredSolution mwis = oracle_wmkcis(p5, ListAssignment(1, 5));
    CHECK(mwis.total_weight == 10);
    CHECK(mwis.vertices == VertexSet(5, {1, 3}));
}

TEST_CASE("oracle_wmkcis rejects above the cap and verifies its own output") {
    WeightedGraph big = corpus::path_graph(17);
    CHECK_THROWS_AS(oracle_wmkcis(big, ListAssignment(2, 17)), InputError);

    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 30; ++rep) {
        WeightedGraph g = corpus::with_weights(corpus::random_graph(7, 0.4, rng),
                                               corpus::random_weights(7, 10, rng));
        ListAssignment lists(2, 7);
        ColouredSolution sol = oracle_wmkcis(g, lists);
        CHECK(solution_is_valid(g, lists, sol));
        auto sub = induced_subgraph(g, sol.vertices);
        ListAssignment sub_lists(2, sub.graph.n());
        CHECK(oracle_l_colourable(sub.graph, sub_lists).has_value());
    }
}

TEST_CASE("oracle_mwis spec values") {
    CHECK(corpus::cycle_graph(5).set_weight(oracle_mwis(corpus::cycle_graph(5))) == 2);

    WeightedGraph star = corpus::with_weights(corpus::star_graph(4), {10, 1, 1, 1, 1});
    CHECK(oracle_mwis(star) == VertexSet(5, {0}));

    CHECK(oracle_mwis(WeightedGraph(0)).count() == 0);
    CHECK_THROWS_AS(oracle_mwis(corpus::path_graph(17)), InputError);
}

TEST_CASE("oracle_l_colourable spec values") {
    ListAssignment k3lists(2, 3);
    CHECK(!oracle_l_colourable(corpus::complete_graph(3), k3lists).has_value());

    ListAssignment p3lists{2, {0b01, 0b10, 0b01}};
    auto col = oracle_l_colourable(corpus::path_graph(3), p3lists);
    REQUIRE(col.has_value());
    CHECK(*col == std::vector<int>{0, 1, 0});

    ListAssignment k2lists{1, {0b1, 0b1}};
    CHECK(!oracle_l_colourable(corpus::path_graph(2), k2lists).has_value());
}

TEST_CASE("one-colour oracle_wmkcis is exactly oracle_mwis") {
    for (int n = 1; n <= 6; ++n)
        for (const WeightedGraph& g : corpus::all_graphs(n)) {
            ColouredSolution a = oracle_wmkcis(g, ListAssignment(1, n));
            CHECK(a.vertices == oracle_mwis(g));
        }
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 7 + static_cast<int>(corpus::rng_below(rng, 4));
        WeightedGraph g = corpus::with_weights(corpus::random_graph(n, 0.35, rng),
                                               corpus::random_weights(n, 10, rng));
        ColouredSolution a = oracle_wmkcis(g, ListAssignment(1, n));
        VertexSet b = oracle_mwis(g);
        CHECK(g.set_weight(a.vertices) == g.set_weight(b));
        CHECK(a.vertices == b);
    }
}

TEST_CASE("adding a vertex never decreases the oracle optimum") {
    std::mt19937_64 rng(808);
    for (int rep = 0; rep < 25; ++rep) {
        WeightedGraph g = corpus::with_weights(corpus::random_graph(8, 0.4, rng),
                                               corpus::random_weights(8, 10, rng));
        ListAssignment lists(2, 8);
        Weight full = oracle_wmkcis(g, lists).total_weight;
        for (int drop = 0; drop < g.n(); ++drop) {
            VertexSet keep = g.all_vertices();
            keep.reset(drop);
            auto sub = induced_subgraph(g, keep);
            CHECK(oracle_wmkcis(sub.graph, ListAssignment(2, 7)).total_weight <= full);
        }
    }
}
