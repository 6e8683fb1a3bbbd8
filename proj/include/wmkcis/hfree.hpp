#ifndef WMKCIS_HFREE_HPP
#define WMKCIS_HFREE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wmkcis/graph.hpp"

namespace wmkcis {

// An induced P5 + r isolated companions. path_vertices induce the path in
// order; isolated_vertices are pairwise non-adjacent and anticomplete to it.
struct Witness {
    std::array<int, 5> path_vertices{};
    std::vector<int> isolated_vertices;

    std::string describe() const;
};

// Re-verifies a witness edge by edge against g.
bool witness_is_valid(const WeightedGraph& g, const Witness& w, int r);

// First induced five-vertex path in deterministic (ascending id) search
// order, or nothing if g is P5-free.
std::optional<Witness> find_induced_p5(const WeightedGraph& g);

// Nothing iff g is (P5 + rK1)-free; otherwise a valid witness.
std::optional<Witness> check_free(const WeightedGraph& g, int r);

} // namespace wmkcis

#endif
