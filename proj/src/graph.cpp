#include "wmkcis/graph.hpp"

namespace wmkcis {

bool WeightedGraph::is_connected_set(const VertexSet& s) const {
    int start = s.first();
    if (start < 0) return false; // the empty set is not a usable S
    VertexSet seen(n_);
    seen.set(start);
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet nxt(n_);
        frontier.for_each([&](int v) { nxt |= adj_[static_cast<size_t>(v)]; });
        nxt &= s;
        nxt -= seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen == s;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw InputError("induced_subgraph: vertex set universe mismatch");
    std::vector<int> to_parent = s.to_vector();
    int m = static_cast<int>(to_parent.size());
    std::vector<int> to_child(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < m; ++i) to_child[static_cast<size_t>(to_parent[static_cast<size_t>(i)])] = i;

    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> weights(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int pv = to_parent[static_cast<size_t>(i)];
        weights[static_cast<size_t>(i)] = g.weight(pv);
        VertexSet nb = g.neighbours(pv) & s;
        nb.for_each([&](int pu) {
            int j = to_child[static_cast<size_t>(pu)];
            if (j > i) edges.emplace_back(i, j);
        });
    }
    return {WeightedGraph(m, edges, std::move(weights)), std::move(to_parent)};
}

WeightedGraph contract_edge(const WeightedGraph& g, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || u == v || !g.adjacent(u, v))
        throw InputError("contract_edge: uv is not an edge");
    int n = g.n();
    std::vector<int> to_new(static_cast<size_t>(n), -1);
    int idx = 0;
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) to_new[static_cast<size_t>(x)] = idx++;
    int w = idx; // contracted vertex is the last index

    std::vector<Weight> weights;
    weights.reserve(static_cast<size_t>(n - 1));
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) weights.push_back(g.weight(x));
    weights.push_back(0);

    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        g.neighbours(x).for_each([&](int y) {
            if (y == u || y == v || y <= x) return;
            edges.emplace_back(to_new[static_cast<size_t>(x)], to_new[static_cast<size_t>(y)]);
        });
    }
    VertexSet wnbr = g.neighbours(u) | g.neighbours(v);
    wnbr.reset(u);
    wnbr.reset(v);
    wnbr.for_each([&](int x) { edges.emplace_back(to_new[static_cast<size_t>(x)], w); });

    return WeightedGraph(n - 1, edges, std::move(weights));
}

bool is_anticomplete(const WeightedGraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) return false;
    for (int v = x.first(); v >= 0; v = x.next(v))
        if (g.neighbours(v).intersects(y)) return false;
    return true;
}

std::vector<VertexSet> connected_components_within(const WeightedGraph& g, const VertexSet& within) {
    std::vector<VertexSet> comps;
    VertexSet remaining = within;
    while (true) {
        int start = remaining.first();
        if (start < 0) break;
        VertexSet comp(g.n());
        comp.set(start);
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet nxt(g.n());
            frontier.for_each([&](int v) { nxt |= g.neighbours(v); });
            nxt &= remaining;
            nxt -= comp;
            comp |= nxt;
            frontier = nxt;
        }
        remaining -= comp;
        comps.push_back(comp);
    }
    return comps; // ascending min id: seeds are taken in ascending order
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
    return connected_components_within(g, g.all_vertices());
}

} // namespace wmkcis
