#ifndef WMKCIS_SOLVER_HPP
#define WMKCIS_SOLVER_HPP

#include <functional>
#include <vector>

#include "wmkcis/graph.hpp"
#include "wmkcis/hfree.hpp"
#include "wmkcis/mwis.hpp"
#include "wmkcis/solution.hpp"

namespace wmkcis {

// The input graph fails the (P5+rK1)-freeness validation (CLI exit code 2).
struct FreenessError : std::runtime_error {
    Witness witness;
    explicit FreenessError(Witness w)
        : std::runtime_error("input is not (P5+rK1)-free: " + w.describe()),
          witness(std::move(w)) {}
};

struct SolverConfig {
    int k = 1;
    int r = 0;
    bool validate_input = true;
    bool canonical_orderings = false; // experimental, excluded from acceptance
    int oracle_cap = 16;
    int jobs = 1;       // worker count for the top-level canvas sweep
    bool memoize = false;
};

// Canvas and pool counts cover the top-level sweep only, so records stay
// identical across memoization and worker-count settings.
struct SolveStats {
    uint64_t canvases = 0;
    uint64_t pool = 0;
    double wall_ms = 0;
};

// Observer for every candidate pool the solver builds (top-level and
// recursive). May fire from worker threads when jobs > 1.
struct SolveDiagnostics {
    std::function<void(const WeightedGraph& component, const std::vector<VertexSet>& pool,
                       const BlobGraph& blob)>
        on_pool;
};

struct SolveResult {
    ColouredSolution solution;
    SolveStats stats;
};

// Deduplicated pool of connected candidate components.
struct CandidatePool {
    std::vector<ColouredSolution> components;
};

// Maximum-weight union of pairwise anticomplete pool members, found as a
// maximum-weight independent set of the blob graph over the pool.
ColouredSolution assemble_from_pool(const WeightedGraph& g, const CandidatePool& pool, int r);

// Exact WMkCIS on a (P5+rK1)-free graph: recursion on the colours still in
// play, canvas sweep + component generation per connected piece, blob-graph
// MWIS over the candidate pool.
SolveResult solve(const WeightedGraph& g, const ListAssignment& lists, const SolverConfig& cfg,
                  const SolveDiagnostics* diag = nullptr);

} // namespace wmkcis

#endif
