#ifndef WMKCIS_SOLUTION_HPP
#define WMKCIS_SOLUTION_HPP

#include <optional>
#include <vector>

#include "wmkcis/graph.hpp"

namespace wmkcis {

// A vertex set together with a proper list colouring of the subgraph it
// induces. colours is indexed by host-graph vertex id; -1 marks absence.
struct ColouredSolution {
    VertexSet vertices;
    std::vector<int> colours;
    Weight total_weight = 0;

    static ColouredSolution empty(int n) {
        return {VertexSet(n), std::vector<int>(static_cast<size_t>(n), -1), 0};
    }
};

// Proper on the induced subgraph, within lists, and weight-consistent.
inline bool solution_is_valid(const WeightedGraph& g, const ListAssignment& lists,
                              const ColouredSolution& sol) {
    if (sol.vertices.universe() != g.n() || static_cast<int>(sol.colours.size()) != g.n())
        return false;
    Weight total = 0;
    for (int v = 0; v < g.n(); ++v) {
        bool in = sol.vertices.test(v);
        int c = sol.colours[static_cast<size_t>(v)];
        if (!in) {
            if (c != -1) return false;
            continue;
        }
        if (c < 0 || c >= lists.k || !lists.allows(v, c)) return false;
        total = checked_add(total, g.weight(v));
        VertexSet nb = g.neighbours(v) & sol.vertices;
        bool clash = false;
        nb.for_each([&](int u) {
            if (sol.colours[static_cast<size_t>(u)] == c) clash = true;
        });
        if (clash) return false;
    }
    return total == sol.total_weight;
}

// Deterministic preference: higher weight first, then lexicographically
// smaller vertex set, then lexicographically smaller colour vector.
inline bool solution_better(const ColouredSolution& a, const ColouredSolution& b) {
    if (a.total_weight != b.total_weight) return a.total_weight > b.total_weight;
    if (a.vertices != b.vertices) return VertexSet::lex_less(a.vertices, b.vertices);
    return a.colours < b.colours;
}

} // namespace wmkcis

#endif
