#include "wmkcis/solver.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "wmkcis/canvas.hpp"
#include "wmkcis/component.hpp"
#include "wmkcis/oracles.hpp"

namespace wmkcis {

namespace {

struct MemoKey {
    uint64_t root_mask = 0;
    std::vector<uint32_t> lists; // per member, ascending root id

    bool operator==(const MemoKey& o) const {
        return root_mask == o.root_mask && lists == o.lists;
    }
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        size_t h = std::hash<uint64_t>{}(k.root_mask);
        for (uint32_t l : k.lists) h ^= std::hash<uint32_t>{}(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct MemoValue {
    Weight weight = 0;
    std::vector<int8_t> colours; // per member, ascending root id; -1 absent
};

struct PoolEntry {
    Weight weight = 0;
    std::vector<int> colours; // host-graph indexed, -1 absent
};

// Order-independent merge rule: identical vertex sets carry identical
// weights; prefer the lexicographically smaller colour vector so parallel
// sweeps and memo settings produce the same pool.
void pool_insert(std::map<uint64_t, PoolEntry>& pool, uint64_t key, PoolEntry entry) {
    auto it = pool.find(key);
    if (it == pool.end()) {
        pool.emplace(key, std::move(entry));
        return;
    }
    // same vertex set => same weight
    if (entry.colours < it->second.colours) it->second.colours = std::move(entry.colours);
}

struct SolveCtx {
    const SolverConfig& cfg;
    P5Subsolver subsolver;
    const SolveDiagnostics* diag;
    std::atomic<uint64_t> canvases{0};
    std::atomic<uint64_t> pool_total{0};
    // sharded to keep parallel sweeps off a single lock
    static constexpr size_t kMemoShards = 64;
    std::array<std::mutex, kMemoShards> memo_mu;
    std::array<std::unordered_map<MemoKey, MemoValue, MemoKeyHash>, kMemoShards> memo;

    size_t shard_of(const MemoKey& key) const { return MemoKeyHash{}(key) % kMemoShards; }
};

ColouredSolution solve_rec(SolveCtx& ctx, const WeightedGraph& g,
                           const std::vector<int>& root_ids, const ListAssignment& lists,
                           int depth);

// Solves one slice subproblem through the memo cache. slice and the pruned
// lists are in g's indexing; root_ids maps g to the original input graph.
ColouredSolution solve_slice(SolveCtx& ctx, const WeightedGraph& g,
                             const std::vector<int>& root_ids, const VertexSet& slice,
                             const ListAssignment& pruned, int depth) {
    MemoKey key;
    size_t shard = 0;
    if (ctx.cfg.memoize) {
        slice.for_each([&](int v) {
            key.root_mask |= uint64_t{1} << root_ids[static_cast<size_t>(v)];
            key.lists.push_back(pruned.at(v));
        });
        shard = ctx.shard_of(key);
        std::lock_guard<std::mutex> lock(ctx.memo_mu[shard]);
        auto it = ctx.memo[shard].find(key);
        if (it != ctx.memo[shard].end()) {
            ColouredSolution out = ColouredSolution::empty(g.n());
            size_t pos = 0;
            slice.for_each([&](int v) {
                int8_t c = it->second.colours[pos++];
                if (c >= 0) {
                    out.vertices.set(v);
                    out.colours[static_cast<size_t>(v)] = c;
                }
            });
            out.total_weight = it->second.weight;
            return out;
        }
    }

    InducedSubgraph sub = induced_subgraph(g, slice);
    std::vector<int> sub_roots(sub.to_parent.size());
    std::vector<uint32_t> sub_lists(sub.to_parent.size());
    for (size_t i = 0; i < sub.to_parent.size(); ++i) {
        sub_roots[i] = root_ids[static_cast<size_t>(sub.to_parent[i])];
        sub_lists[i] = pruned.at(sub.to_parent[i]);
    }
    ColouredSolution local =
        solve_rec(ctx, sub.graph, sub_roots, ListAssignment{pruned.k, std::move(sub_lists)}, depth);

    ColouredSolution out = ColouredSolution::empty(g.n());
    out.total_weight = local.total_weight;
    for (size_t i = 0; i < sub.to_parent.size(); ++i) {
        if (!local.vertices.test(static_cast<int>(i))) continue;
        int v = sub.to_parent[i];
        out.vertices.set(v);
        out.colours[static_cast<size_t>(v)] = local.colours[i];
    }

    if (ctx.cfg.memoize) {
        MemoValue val;
        val.weight = out.total_weight;
        slice.for_each([&](int v) {
            val.colours.push_back(static_cast<int8_t>(out.colours[static_cast<size_t>(v)]));
        });
        std::lock_guard<std::mutex> lock(ctx.memo_mu[shard]);
        ctx.memo[shard].emplace(std::move(key), std::move(val));
    }
    return out;
}

// Canvas sweep over one connected graph: generate a candidate component per
// canvas, deduplicate, then pick the best anticomplete union via the blob
// graph.
ColouredSolution sweep_component(SolveCtx& ctx, const WeightedGraph& g,
                                 const std::vector<int>& root_ids, const ListAssignment& lists,
                                 int depth) {
    int bound = size_bound(lists.k, ctx.cfg.r);
    std::vector<VertexSet> sets = connected_sets_upto(g, bound);
    EnumerateOptions opts;
    opts.canonical_orderings = ctx.cfg.canonical_orderings;
    opts.minimal_families = true; // the optimal canvas survives this pruning

    std::map<uint64_t, PoolEntry> pool;
    std::mutex pool_mu;

    auto sweep_range = [&](size_t begin, size_t end, std::map<uint64_t, PoolEntry>& local,
                           uint64_t& local_canvases) {
        RecursiveSolver rec = [&](const WeightedGraph& gg, const VertexSet& slice,
                                  const ListAssignment& pruned) {
            return solve_slice(ctx, gg, root_ids, slice, pruned, depth + 1);
        };
        for (size_t si = begin; si < end; ++si) {
            enumerate_canvases_for_set(
                g, lists, lists.k, ctx.cfg.r, sets[si],
                [&](const Canvas& q, const CanvasDerived& d) {
                    ++local_canvases;
                    ColouredSolution comp = generate_component(g, q, d, lists, rec);
                    pool_insert(local, comp.vertices.low_word(),
                                PoolEntry{comp.total_weight, std::move(comp.colours)});
                    return true;
                },
                opts);
        }
    };

    int jobs = depth == 0 ? std::max(1, ctx.cfg.jobs) : 1;
    if (jobs == 1 || sets.size() <= 1) {
        uint64_t local_canvases = 0;
        sweep_range(0, sets.size(), pool, local_canvases);
        if (depth == 0) ctx.canvases += local_canvases;
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                std::map<uint64_t, PoolEntry> local;
                uint64_t local_canvases = 0;
                while (true) {
                    size_t si = next.fetch_add(1);
                    if (si >= sets.size()) break;
                    sweep_range(si, si + 1, local, local_canvases);
                }
                std::lock_guard<std::mutex> lock(pool_mu);
                for (auto& [key, entry] : local) pool_insert(pool, key, std::move(entry));
                if (depth == 0) ctx.canvases += local_canvases;
            });
        }
        for (auto& w : workers) w.join();
    }

    if (depth == 0) ctx.pool_total += pool.size();

    std::vector<VertexSet> cand_sets;
    cand_sets.reserve(pool.size());
    for (const auto& [key, entry] : pool) {
        VertexSet s(g.n());
        s.assign_low_word(key);
        cand_sets.push_back(s);
    }
    BlobGraph blob = build_blob_graph(g, cand_sets);
    if (ctx.diag && ctx.diag->on_pool) ctx.diag->on_pool(g, cand_sets, blob);

    VertexSet picked = mwis_p5rk1(blob.graph, ctx.cfg.r, ctx.subsolver);
    ColouredSolution out = ColouredSolution::empty(g.n());
    picked.for_each([&](int bi) {
        const PoolEntry& entry = pool.at(cand_sets[static_cast<size_t>(bi)].low_word());
        cand_sets[static_cast<size_t>(bi)].for_each([&](int v) {
            out.vertices.set(v);
            out.colours[static_cast<size_t>(v)] = entry.colours[static_cast<size_t>(v)];
        });
        out.total_weight = checked_add(out.total_weight, entry.weight);
    });
    return out;
}

ColouredSolution solve_rec(SolveCtx& ctx, const WeightedGraph& g,
                           const std::vector<int>& root_ids, const ListAssignment& lists,
                           int depth) {
    uint32_t um = lists.union_mask();
    if (__builtin_popcount(um) <= 1) {
        // a single usable colour everywhere: plain MWIS over listed vertices
        VertexSet active(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (lists.at(v)) active.set(v);
        InducedSubgraph sub = induced_subgraph(g, active);
        VertexSet mis = mwis_p5rk1(sub.graph, ctx.cfg.r, ctx.subsolver);
        ColouredSolution out = ColouredSolution::empty(g.n());
        int colour = um ? __builtin_ctz(um) : 0;
        mis.for_each([&](int i) {
            int v = sub.to_parent[static_cast<size_t>(i)];
            out.vertices.set(v);
            out.colours[static_cast<size_t>(v)] = colour;
            out.total_weight = checked_add(out.total_weight, g.weight(v));
        });
        return out;
    }

    if (g.n() > 64) throw InputError("solver supports at most 64 vertices");

    std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() == 1) return sweep_component(ctx, g, root_ids, lists, depth);

    ColouredSolution out = ColouredSolution::empty(g.n());
    for (const VertexSet& comp : comps) {
        ColouredSolution part = solve_slice(ctx, g, root_ids, comp, lists, depth);
        part.vertices.for_each([&](int v) {
            out.vertices.set(v);
            out.colours[static_cast<size_t>(v)] = part.colours[static_cast<size_t>(v)];
        });
        out.total_weight = checked_add(out.total_weight, part.total_weight);
    }
    return out;
}

} // namespace

ColouredSolution assemble_from_pool(const WeightedGraph& g, const CandidatePool& pool, int r) {
    std::map<VertexSet, const ColouredSolution*, VertexSetLexLess> dedup;
    for (const ColouredSolution& c : pool.components) {
        auto [it, inserted] = dedup.try_emplace(c.vertices, &c);
        if (!inserted && c.colours < it->second->colours) it->second = &c;
    }
    std::vector<VertexSet> cand_sets;
    std::vector<const ColouredSolution*> members;
    for (const auto& [verts, sol] : dedup) {
        cand_sets.push_back(verts);
        members.push_back(sol);
    }
    BlobGraph blob = build_blob_graph(g, cand_sets);
    VertexSet picked = mwis_p5rk1(blob.graph, r, default_p5_subsolver());
    ColouredSolution out = ColouredSolution::empty(g.n());
    picked.for_each([&](int bi) {
        const ColouredSolution* sol = members[static_cast<size_t>(bi)];
        sol->vertices.for_each([&](int v) {
            out.vertices.set(v);
            out.colours[static_cast<size_t>(v)] = sol->colours[static_cast<size_t>(v)];
        });
        out.total_weight = checked_add(out.total_weight, sol->total_weight);
    });
    return out;
}

SolveResult solve(const WeightedGraph& g, const ListAssignment& lists, const SolverConfig& cfg,
                  const SolveDiagnostics* diag) {
    if (cfg.k < 1 || cfg.r < 0 || cfg.jobs < 1 || cfg.oracle_cap < 0)
        throw InputError("solve: invalid configuration");
    if (lists.k != cfg.k) throw InputError("solve: lists.k != cfg.k");
    lists.validate_against(g);
    if (cfg.validate_input) {
        if (auto w = check_free(g, cfg.r)) throw FreenessError(*w);
    }

    auto start = std::chrono::steady_clock::now();
    SolveCtx ctx{cfg, default_p5_subsolver(), diag, {}, {}, {}, {}};
    std::vector<int> root_ids(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) root_ids[static_cast<size_t>(v)] = v;

    SolveResult result;
    result.solution = solve_rec(ctx, g, root_ids, lists, 0);
    result.stats.canvases = ctx.canvases.load();
    result.stats.pool = ctx.pool_total.load();
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    if (!solution_is_valid(g, lists, result.solution))
        throw std::logic_error("solve: produced an invalid solution");
    return result;
}

} // namespace wmkcis
