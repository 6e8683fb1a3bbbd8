#ifndef WMKCIS_GRAPH_HPP
#define WMKCIS_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmkcis/bitset.hpp"

namespace wmkcis {

using Weight = uint64_t;

// Malformed inputs and violated preconditions (CLI exit code 1).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Weight arithmetic is checked; wrapping would silently corrupt comparisons.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("weight addition overflow");
    return r;
}

// Simple undirected graph with nonnegative integer vertex weights.
// Immutable after construction; all operations below are pure.
class WeightedGraph {
public:
    WeightedGraph() = default;

    explicit WeightedGraph(int n, const std::vector<std::pair<int, int>>& edges = {},
                           std::vector<Weight> weights = {})
        : n_(n) {
        if (n < 0) throw InputError("graph: negative vertex count");
        if (weights.empty()) weights.assign(static_cast<size_t>(n), 1);
        if (static_cast<int>(weights.size()) != n)
            throw InputError("graph: weight vector length != vertex count");
        weights_ = std::move(weights);
        adj_.assign(static_cast<size_t>(n), VertexSet(n));
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int n() const { return n_; }
    const VertexSet& neighbours(int v) const { return adj_.at(static_cast<size_t>(v)); }
    bool adjacent(int u, int v) const { return adj_.at(static_cast<size_t>(u)).test(v); }
    Weight weight(int v) const { return weights_.at(static_cast<size_t>(v)); }
    const std::vector<Weight>& weights() const { return weights_; }

    int degree(int v) const { return neighbours(v).count(); }

    int edge_count() const {
        int total = 0;
        for (const auto& row : adj_) total += row.count();
        return total / 2;
    }

    VertexSet all_vertices() const {
        VertexSet s(n_);
        for (int v = 0; v < n_; ++v) s.set(v);
        return s;
    }

    // N_G(S): union of neighbourhoods minus S itself.
    VertexSet neighbourhood(const VertexSet& s) const {
        VertexSet out(n_);
        s.for_each([&](int v) { out |= adj_[static_cast<size_t>(v)]; });
        out -= s;
        return out;
    }

    Weight set_weight(const VertexSet& s) const {
        Weight total = 0;
        s.for_each([&](int v) { total = checked_add(total, weights_[static_cast<size_t>(v)]); });
        return total;
    }

    bool is_independent(const VertexSet& s) const {
        for (int v = s.first(); v >= 0; v = s.next(v))
            if (adj_[static_cast<size_t>(v)].intersects(s)) return false;
        return true;
    }

    bool is_connected_set(const VertexSet& s) const;

private:
    void add_edge_internal(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InputError("graph: edge endpoint out of range");
        if (u == v) throw InputError("graph: self-loop");
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Weight> weights_;
};

// Per-vertex colour lists L(v) as bitmasks over 0-based colours 0..k-1.
struct ListAssignment {
    int k = 0;
    std::vector<uint32_t> lists;

    ListAssignment() = default;
    // All lists full: L(v) = [k].
    ListAssignment(int k_, int n) : k(k_), lists(static_cast<size_t>(n), full_mask(k_)) {}
    ListAssignment(int k_, std::vector<uint32_t> lists_) : k(k_), lists(std::move(lists_)) {}

    static uint32_t full_mask(int k) {
        if (k < 0 || k > 30) throw InputError("lists: k out of supported range [0,30]");
        return k == 0 ? 0u : ((uint32_t{1} << k) - 1);
    }

    uint32_t at(int v) const { return lists.at(static_cast<size_t>(v)); }
    bool allows(int v, int c) const { return (at(v) >> c) & 1; }

    uint32_t union_mask() const {
        uint32_t m = 0;
        for (uint32_t l : lists) m |= l;
        return m;
    }

    void validate_against(const WeightedGraph& g) const {
        if (static_cast<int>(lists.size()) != g.n()) throw InputError("lists: length != vertex count");
        for (uint32_t l : lists)
            if (l & ~full_mask(k)) throw InputError("lists: colour outside [k]");
    }
};

struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<int> to_parent; // new index -> parent index
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

// G/uv per the usual contraction: u, v removed, new vertex w (last index) with
// N(w) = (N(u) ∪ N(v)) \ {u,v}. The contracted vertex gets weight 0; the
// operation only feeds freeness arguments, never weight sums.
WeightedGraph contract_edge(const WeightedGraph& g, int u, int v);

bool is_anticomplete(const WeightedGraph& g, const VertexSet& x, const VertexSet& y);

// Maximal connected sets, ascending by minimum vertex id.
std::vector<VertexSet> connected_components(const WeightedGraph& g);
std::vector<VertexSet> connected_components_within(const WeightedGraph& g, const VertexSet& within);

} // namespace wmkcis

#endif
