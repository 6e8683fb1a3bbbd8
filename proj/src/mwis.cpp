#include "wmkcis/mwis.hpp"

#include "wmkcis/hfree.hpp"
#include "wmkcis/oracles.hpp"

namespace wmkcis {

BlobGraph build_blob_graph(const WeightedGraph& g, const std::vector<VertexSet>& cands) {
    int m = static_cast<int>(cands.size());
    std::vector<VertexSet> closed;
    closed.reserve(cands.size());
    std::vector<Weight> weights(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const VertexSet& c = cands[static_cast<size_t>(i)];
        if (!g.is_connected_set(c))
            throw InputError("build_blob_graph: candidate does not induce a connected subgraph");
        closed.push_back(c | g.neighbourhood(c));
        weights[static_cast<size_t>(i)] = g.set_weight(c);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (cands[static_cast<size_t>(i)].intersects(closed[static_cast<size_t>(j)]))
                edges.emplace_back(i, j);
    return {WeightedGraph(m, edges, std::move(weights)), cands};
}

P5Subsolver default_p5_subsolver() {
    return [](const WeightedGraph& g) { return mwis_branch_and_bound(g); };
}

namespace {

struct P5rk1State {
    const WeightedGraph& g;
    int r;
    const P5Subsolver& subsolver;
    VertexSet best;
    Weight best_w = 0;

    void offer(const VertexSet& cand) {
        Weight w = g.set_weight(cand);
        if (w > best_w || (w == best_w && VertexSet::lex_less(cand, best))) {
            best = cand;
            best_w = w;
        }
    }

    void extend_full(const VertexSet& t) {
        VertexSet rest = g.all_vertices() - t;
        t.for_each([&](int v) { rest -= g.neighbours(v); });
        auto sub = induced_subgraph(g, rest);
        VertexSet plus = subsolver(sub.graph);
        VertexSet cand = t;
        plus.for_each([&](int v) { cand.set(sub.to_parent[static_cast<size_t>(v)]); });
        offer(cand);
    }

    // Independent sets of size 1..r in lexicographic order, skipping
    // non-independent extensions via bitset intersection.
    void enumerate(VertexSet& cur, const VertexSet& cand, int size) {
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            cur.set(v);
            offer(cur);
            if (size + 1 == r) {
                extend_full(cur);
            } else {
                VertexSet nxt = cand - g.neighbours(v);
                VertexSet trimmed(g.n());
                for (int u = nxt.next(v); u >= 0; u = nxt.next(u)) trimmed.set(u);
                enumerate(cur, trimmed, size + 1);
            }
            cur.reset(v);
        }
    }
};

} // namespace

VertexSet mwis_p5rk1(const WeightedGraph& g, int r, const P5Subsolver& subsolver) {
    if (r < 0) throw InputError("mwis_p5rk1: r must be nonnegative");
#ifndef NDEBUG
    if (auto w = check_free(g, r))
        throw InputError("mwis_p5rk1: input is not (P5+rK1)-free; witness " + w->describe());
#endif
    P5rk1State st{g, r, subsolver, VertexSet(g.n()), 0};
    if (r == 0) {
        st.extend_full(VertexSet(g.n()));
    } else {
        VertexSet cur(g.n());
        st.enumerate(cur, g.all_vertices(), 0);
    }
    return st.best;
}

} // namespace wmkcis
