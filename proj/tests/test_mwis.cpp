#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "wmkcis/canvas.hpp"
#include "wmkcis/hfree.hpp"
#include "wmkcis/mwis.hpp"
#include "wmkcis/oracles.hpp"

using namespace wmkcis;

TEST_CASE("blob graph over singletons reproduces the base graph") {
    std::mt19937_64 rng(1);
    WeightedGraph g = corpus::with_weights(corpus::random_graph(7, 0.4, rng),
                                           corpus::random_weights(7, 9, rng));
    std::vector<VertexSet> singles;
    for (int v = 0; v < g.n(); ++v) singles.push_back(VertexSet(7, {v}));
    BlobGraph blob = build_blob_graph(g, singles);
    CHECK(blob.graph.n() == g.n());
    for (int u = 0; u < g.n(); ++u) {
        CHECK(blob.graph.weight(u) == g.weight(u));
        for (int v = 0; v < g.n(); ++v)
            if (u != v) CHECK(blob.graph.adjacent(u, v) == g.adjacent(u, v));
    }
}

TEST_CASE("blob graph edge rules") {
    WeightedGraph p3 = corpus::path_graph(3);
    // overlapping candidates force an edge
    BlobGraph overlap = build_blob_graph(p3, {VertexSet(3, {0, 1}), VertexSet(3, {1, 2})});
    CHECK(overlap.graph.adjacent(0, 1));
    // two ends of a path are non-adjacent blobs
    BlobGraph apart = build_blob_graph(p3, {VertexSet(3, {0}), VertexSet(3, {2})});
    CHECK(!apart.graph.adjacent(0, 1));
    CHECK(apart.graph.edge_count() == 0);
    // disconnected candidate rejected
    CHECK_THROWS_AS(build_blob_graph(p3, {VertexSet(3, {0, 2})}), InputError);
}

TEST_CASE("mwis_p5rk1 spec cases") {
    // r = 0 delegates to the subsolver
    int calls = 0;
    P5Subsolver counting = [&](const WeightedGraph& g) {
        ++calls;
        return mwis_branch_and_bound(g);
    };
    WeightedGraph p4 = corpus::path_graph(4);
    VertexSet s = mwis_p5rk1(p4, 0, counting);
    CHECK(calls == 1);
    CHECK(p4.set_weight(s) == 2);

    // C5 + K1 with r = 1
    WeightedGraph c5k1 = corpus::disjoint_union(corpus::cycle_graph(5), corpus::path_graph(1));
    CHECK(c5k1.set_weight(mwis_p5rk1(c5k1, 1)) == 3);
    CHECK(c5k1.set_weight(oracle_mwis(c5k1)) == 3);

    // alpha(g) <= r: the answer appears among the small independent sets
    WeightedGraph k4 = corpus::with_weights(corpus::complete_graph(4), {1, 7, 3, 2});
    CHECK(k4.set_weight(mwis_p5rk1(k4, 2)) == 7);
}

TEST_CASE("mwis_p5rk1 matches oracle_mwis on free corpus graphs") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 60; ++rep) {
        int r = rep % 3;
        int n = 6 + static_cast<int>(corpus::rng_below(rng, 5));
        WeightedGraph g = corpus::with_weights(corpus::random_free_graph(n, r, rng),
                                               corpus::random_weights(n, 10, rng));
        VertexSet fast = mwis_p5rk1(g, r);
        CHECK(g.is_independent(fast));
        CHECK(g.set_weight(fast) == g.set_weight(oracle_mwis(g)));
    }
}

TEST_CASE("deleting closed neighbourhoods of independent r-sets leaves P5-free graphs") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        int r = 1 + rep % 2;
        WeightedGraph g = corpus::random_free_graph(8, r, rng);
        // enumerate all independent r-sets directly
        std::vector<int> pick;
        std::function<void(int, int)> go = [&](int from, int left) {
            if (left == 0) {
                VertexSet rest = g.all_vertices();
                for (int v : pick) {
                    rest.reset(v);
                    rest -= g.neighbours(v);
                }
                CHECK(!find_induced_p5(induced_subgraph(g, rest).graph).has_value());
                return;
            }
            for (int v = from; v < g.n(); ++v) {
                bool ok = true;
                for (int u : pick)
                    if (g.adjacent(u, v)) ok = false;
                if (!ok) continue;
                pick.push_back(v);
                go(v + 1, left - 1);
                pick.pop_back();
            }
        };
        go(0, r);
    }
}

TEST_CASE("blob graphs of free graphs stay free") {
    std::mt19937_64 rng(66);
    for (int rep = 0; rep < 20; ++rep) {
        int r = rep % 2;
        WeightedGraph g = corpus::random_free_graph(7, r, rng);
        // random family of connected induced subgraphs
        std::vector<VertexSet> cands;
        for (const VertexSet& s : connected_sets_upto(g, 3))
            if (corpus::rng_below(rng, 3) == 0) cands.push_back(s);
        BlobGraph blob = build_blob_graph(g, cands);
        CHECK(!check_free(blob.graph, r).has_value());
    }
}

TEST_CASE("independent blob sets pull back to anticomplete unions") {
    std::mt19937_64 rng(505);
    WeightedGraph g = corpus::random_free_graph(8, 1, rng);
    std::vector<VertexSet> cands = connected_sets_upto(g, 2);
    BlobGraph blob = build_blob_graph(g, cands);
    VertexSet pick = mwis_p5rk1(blob.graph, 1);
    Weight total = 0;
    std::vector<int> chosen = pick.to_vector();
    for (size_t a = 0; a < chosen.size(); ++a) {
        total = checked_add(total, g.set_weight(blob.origin[static_cast<size_t>(chosen[a])]));
        for (size_t b = a + 1; b < chosen.size(); ++b)
            CHECK(is_anticomplete(g, blob.origin[static_cast<size_t>(chosen[a])],
                                  blob.origin[static_cast<size_t>(chosen[b])]));
    }
    CHECK(total == blob.graph.set_weight(pick));
}
