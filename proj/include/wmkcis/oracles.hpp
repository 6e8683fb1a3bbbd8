#ifndef WMKCIS_ORACLES_HPP
#define WMKCIS_ORACLES_HPP

#include <optional>
#include <vector>

#include "wmkcis/graph.hpp"
#include "wmkcis/solution.hpp"

namespace wmkcis {

// Exponential-time exact solvers used as ground truth in tests. They share
// only the basic graph types with the solving pipeline, not its logic.

inline constexpr int kDefaultOracleCap = 16;

// Maximum-weight L-colourable induced subgraph by exhaustive subset scan.
// Ties: maximum weight, then lexicographically smallest vertex set.
ColouredSolution oracle_wmkcis(const WeightedGraph& g, const ListAssignment& lists,
                               int cap = kDefaultOracleCap);

// Maximum-weight independent set by branch and bound on the highest-degree
// vertex, same tie-break.
VertexSet oracle_mwis(const WeightedGraph& g, int cap = kDefaultOracleCap);

// Uncapped core of oracle_mwis; also serves as the default P5-free subsolver
// in the solving pipeline.
VertexSet mwis_branch_and_bound(const WeightedGraph& g);

// A proper list colouring of all of g, if one exists. Backtracking over
// vertices in ascending order, colours tried in ascending order.
std::optional<std::vector<int>> oracle_l_colourable(const WeightedGraph& g,
                                                    const ListAssignment& lists);

} // namespace wmkcis

#endif
