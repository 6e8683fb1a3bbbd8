#ifndef WMKCIS_MWIS_HPP
#define WMKCIS_MWIS_HPP

#include <functional>
#include <vector>

#include "wmkcis/graph.hpp"

namespace wmkcis {

// Auxiliary graph over a family of connected induced subgraphs: one vertex
// per member, an edge whenever two members intersect or are joined by an
// edge of the base graph. Blob weights are the summed member weights.
struct BlobGraph {
    WeightedGraph graph;
    std::vector<VertexSet> origin; // blob vertex -> member vertex set in the base graph
};

BlobGraph build_blob_graph(const WeightedGraph& g, const std::vector<VertexSet>& cands);

// Exact MWIS oracle for P5-free graphs, pluggable so the polynomial algorithm
// from the literature could be slotted in later.
using P5Subsolver = std::function<VertexSet(const WeightedGraph&)>;

P5Subsolver default_p5_subsolver();

// MWIS on a (P5 + rK1)-free graph: enumerate all independent sets of size at
// most r; for each size-r set T, extend by an exact MWIS of g minus the
// closed neighbourhood of T (a P5-free graph); return the best candidate.
// Ties: maximum weight, then lexicographically smallest vertex set.
VertexSet mwis_p5rk1(const WeightedGraph& g, int r, const P5Subsolver& subsolver);

inline VertexSet mwis_p5rk1(const WeightedGraph& g, int r) {
    return mwis_p5rk1(g, r, default_p5_subsolver());
}

} // namespace wmkcis

#endif
