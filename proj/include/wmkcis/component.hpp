#ifndef WMKCIS_COMPONENT_HPP
#define WMKCIS_COMPONENT_HPP

#include <functional>
#include <vector>

#include "wmkcis/canvas.hpp"
#include "wmkcis/graph.hpp"
#include "wmkcis/solution.hpp"

namespace wmkcis {

// Per-vertex forbidden colour sets F(v) and residual lists L(v) \ F(v),
// meaningful for v in N(S); other vertices keep their original lists.
struct PrunedLists {
    std::vector<uint32_t> forbidden;
    std::vector<uint32_t> residual;
};

PrunedLists prune_lists(const WeightedGraph& g, const Canvas& q, const CanvasDerived& d,
                        const ListAssignment& lists);

// Solves the per-slice subproblem on g restricted to `slice` under the pruned
// lists; returns a solution in g's indexing with vertices inside slice. The
// top-level solver passes its own recursion; tests may pass an oracle.
using RecursiveSolver = std::function<ColouredSolution(
    const WeightedGraph& g, const VertexSet& slice, const ListAssignment& pruned)>;

// The component generation step: pin or prune colour lists over N(S), solve
// the reduced-list subproblem on each slice X_i minus neighbours of the B
// sets, and return G[S] together with those slice optima and the merged
// colouring.
ColouredSolution generate_component(const WeightedGraph& g, const Canvas& q,
                                    const CanvasDerived& d, const ListAssignment& lists,
                                    const RecursiveSolver& solver);

ColouredSolution generate_component(const WeightedGraph& g, const Canvas& q,
                                    const ListAssignment& lists, const RecursiveSolver& solver);

// Whether the vertex set of c_sub is associated with canvas q: S inside and
// dominating it, every outside vertex anticomplete to the B sets, and some
// proper list colouring extending f exists within the pinned/pruned lists.
bool is_associated(const ColouredSolution& c_sub, const Canvas& q, const WeightedGraph& g,
                   const ListAssignment& lists);

} // namespace wmkcis

#endif
