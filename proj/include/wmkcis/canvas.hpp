#ifndef WMKCIS_CANVAS_HPP
#define WMKCIS_CANVAS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmkcis/graph.hpp"

namespace wmkcis {

// Size cap for the ordered connected set S: (k+2)(r-1)+5 in general, with a
// floor of max(k,3) coming from the P5-free case (a connected P5-free graph
// has a connected dominating subgraph that is a clique, hence at most k
// vertices when k-colourable, or has at most 3 vertices). The general formula
// is weak or negative at r = 0, where the floor takes over.
int size_bound(int k, int r);

// The guessing structure driving component generation: an ordered connected
// set S with an L-colouring f, plus per-colour families A (colour-class
// guesses in N(S)), B (colour classes in other components), and per-slice
// families Y, Z. Colours are 0-based internally.
struct Canvas {
    std::vector<int> s;  // ordered vertices of S
    std::vector<int> f;  // f[pos] = colour of s[pos]
    int k = 0;
    int r = 0;
    std::vector<VertexSet> a_sets;  // [k]
    std::vector<VertexSet> b_sets;  // [k]
    std::vector<VertexSet> y_sets;  // [(i*k + c)*t + l], meaningful for i < l
    std::vector<VertexSet> z_sets;  // [i*k + c]

    int t() const { return static_cast<int>(s.size()); }

    const VertexSet& y(int i, int c, int l) const {
        return y_sets[static_cast<size_t>((i * k + c) * t() + l)];
    }
    VertexSet& y(int i, int c, int l) {
        return y_sets[static_cast<size_t>((i * k + c) * t() + l)];
    }
    const VertexSet& z(int i, int c) const { return z_sets[static_cast<size_t>(i * k + c)]; }
    VertexSet& z(int i, int c) { return z_sets[static_cast<size_t>(i * k + c)]; }

    static Canvas make(int n, int k, int r, std::vector<int> s_order, std::vector<int> colours);
};

// Derived sets: the partition X_1..X_t of N(S), the outside set M, and the
// ruled-out subset W of M (vertices adjacent to every full-size B_c).
struct CanvasDerived {
    std::vector<VertexSet> x_parts;
    VertexSet m;
    VertexSet w;
};

CanvasDerived derive(const Canvas& q, const WeightedGraph& g);

// First violated condition, named by its label in the canvas definition:
// (Set S), (Col. f), (Sets A), (Sets B), (Sets Y), (Sets Z), (Small Z),
// (Disjoint), (Colour), (Comps.). ok=true when all ten hold.
struct ValidationReport {
    bool ok = true;
    std::string label;
    std::string detail;
};

ValidationReport validate(const Canvas& q, const WeightedGraph& g, const ListAssignment& lists,
                          int k, int r);

struct EnumerateOptions {
    // Experimental: enumerate only the ascending ordering of each S.
    bool canonical_orderings = false;
    // Solver mode: additionally require every A_c member to keep a private
    // neighbour in M \ W and every Y member a private neighbour in
    // X_l \ N(Z_{l,c}), the structure the optimal canvas construction
    // guarantees. Skips canvases that can never beat the optimum; the
    // default stream stays faithful to the plain definition.
    bool minimal_families = false;
};

// Yield receives a workspace canvas that is only valid during the call; copy
// it to persist. Return false to stop the stream.
using CanvasYield = std::function<bool(const Canvas&, const CanvasDerived&)>;

// All valid canvases, exactly once, in deterministic order: S by (size, lex
// vertex list), then orderings lexicographically, then f, then the A/B/Z/Y
// families lexicographically. Y sets are generated only for triples with
// |Z_{l,c}| = r; other values cannot occur in the optimal canvas.
void enumerate_canvases(const WeightedGraph& g, const ListAssignment& lists, int k, int r,
                        const CanvasYield& yield, const EnumerateOptions& opts = {});

// Enumeration restricted to one underlying set S (sharding hook).
void enumerate_canvases_for_set(const WeightedGraph& g, const ListAssignment& lists, int k,
                                int r, const VertexSet& s_set, const CanvasYield& yield,
                                const EnumerateOptions& opts = {});

uint64_t count_canvases(const WeightedGraph& g, const ListAssignment& lists, int k, int r,
                        const EnumerateOptions& opts = {});

// Connected vertex sets of size 1..max_size in (size, lex) order.
std::vector<VertexSet> connected_sets_upto(const WeightedGraph& g, int max_size);

// Smallest connected dominating set found by increasing-size exhaustive
// search with lexicographic tie-break; nullopt when nothing within
// size_bound(k, r) exists (impossible when g is connected, k-colourable and
// (P5+rK1)-free).
std::optional<VertexSet> find_small_connected_dominating_set(const WeightedGraph& g, int k, int r);

} // namespace wmkcis

#endif
