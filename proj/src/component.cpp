#include "wmkcis/component.hpp"

namespace wmkcis {

namespace {

inline uint64_t bit(int v) { return uint64_t{1} << v; }

// Mask view of a canvas plus everything the list-pruning rules read.
struct AlgState {
    int n, k, t, r;
    std::vector<uint64_t> adj;
    std::vector<uint64_t> x;       // X_i
    uint64_t ns = 0, mw = 0;       // N(S), M \ W
    std::vector<uint64_t> sclass;  // S members per colour
    std::vector<uint64_t> pin;     // per colour: A_c u (all Y_{.,c,.}) u (all Z_{.,c})
    std::vector<uint64_t> line9n;  // per colour: N(A_c u B_c u Z u Y)
    std::vector<uint64_t> na;      // per colour: N(A_c)
    std::vector<char> z_small;     // (i*k+c): |Z_{i,c}| < r
    std::vector<uint64_t> xz;      // (l*k+c): X_l \ N(Z_{l,c})
    std::vector<uint64_t> ytgt;    // ((i*k+c)*t+l): N(Y_{i,c,l}) cap xz(l,c)
    uint64_t b_union = 0, nb_union = 0;
    std::vector<int> slice_of;     // vertex -> i with v in X_i, else -1

    AlgState(const WeightedGraph& g, const Canvas& q, const CanvasDerived& d) {
        n = g.n();
        k = q.k;
        t = q.t();
        r = q.r;
        if (n > 64) throw InputError("component generation supports at most 64 vertices");
        adj.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            uint64_t w = 0;
            g.neighbours(v).for_each([&](int u) { w |= bit(u); });
            adj[static_cast<size_t>(v)] = w;
        }
        auto nbrs_of = [&](uint64_t set) {
            uint64_t out = 0;
            while (set) {
                out |= adj[static_cast<size_t>(__builtin_ctzll(set))];
                set &= set - 1;
            }
            return out;
        };
        x.assign(static_cast<size_t>(t), 0);
        slice_of.assign(static_cast<size_t>(n), -1);
        for (int i = 0; i < t; ++i) {
            x[static_cast<size_t>(i)] = d.x_parts[static_cast<size_t>(i)].low_word();
            d.x_parts[static_cast<size_t>(i)].for_each(
                [&](int v) { slice_of[static_cast<size_t>(v)] = i; });
            ns |= x[static_cast<size_t>(i)];
        }
        mw = d.m.low_word() & ~d.w.low_word();
        sclass.assign(static_cast<size_t>(k), 0);
        pin.assign(static_cast<size_t>(k), 0);
        line9n.assign(static_cast<size_t>(k), 0);
        na.assign(static_cast<size_t>(k), 0);
        z_small.assign(static_cast<size_t>(t * k), 0);
        xz.assign(static_cast<size_t>(t * k), 0);
        ytgt.assign(static_cast<size_t>(t * k * t), 0);
        for (int i = 0; i < t; ++i)
            sclass[static_cast<size_t>(q.f[static_cast<size_t>(i)])] |=
                bit(q.s[static_cast<size_t>(i)]);
        for (int c = 0; c < k; ++c) {
            uint64_t ac = q.a_sets[static_cast<size_t>(c)].low_word();
            uint64_t bc = q.b_sets[static_cast<size_t>(c)].low_word();
            uint64_t fam = ac;
            for (int i = 0; i < t; ++i) {
                uint64_t zc = q.z(i, c).low_word();
                fam |= zc;
                z_small[static_cast<size_t>(i * k + c)] =
                    static_cast<char>(__builtin_popcountll(zc) < r);
                xz[static_cast<size_t>(i * k + c)] = x[static_cast<size_t>(i)] & ~nbrs_of(zc);
                for (int l = i + 1; l < t; ++l) fam |= q.y(i, c, l).low_word();
            }
            pin[static_cast<size_t>(c)] = fam;
            na[static_cast<size_t>(c)] = nbrs_of(ac);
            line9n[static_cast<size_t>(c)] = nbrs_of(fam | bc);
            b_union |= bc;
        }
        nb_union = nbrs_of(b_union);
        for (int i = 0; i < t; ++i)
            for (int c = 0; c < k; ++c)
                for (int l = i + 1; l < t; ++l)
                    ytgt[static_cast<size_t>((i * k + c) * t + l)] =
                        nbrs_of(q.y(i, c, l).low_word()) & xz[static_cast<size_t>(l * k + c)];
    }

    // Pinned colour of v, or -1. At most one colour matches (Disjoint).
    int pinned(int v) const {
        for (int c = 0; c < k; ++c)
            if (pin[static_cast<size_t>(c)] & bit(v)) return c;
        return -1;
    }

    // Forbidden set for an unpinned v in X_i: the union of the five rules.
    uint32_t forbidden(int v, int i) const {
        uint32_t f = 0;
        uint64_t av = adj[static_cast<size_t>(v)];
        for (int c = 0; c < k; ++c) {
            if (av & sclass[static_cast<size_t>(c)]) { f |= uint32_t{1} << c; continue; }
            if ((av & mw) & ~na[static_cast<size_t>(c)]) { f |= uint32_t{1} << c; continue; }
            if (line9n[static_cast<size_t>(c)] & bit(v)) { f |= uint32_t{1} << c; continue; }
            if (r > 0 && z_small[static_cast<size_t>(i * k + c)]) { f |= uint32_t{1} << c; continue; }
            for (int l = i + 1; l < t; ++l) {
                if (z_small[static_cast<size_t>(l * k + c)]) continue;
                uint64_t reach = av & xz[static_cast<size_t>(l * k + c)];
                if (reach & ~ytgt[static_cast<size_t>((i * k + c) * t + l)]) {
                    f |= uint32_t{1} << c;
                    break;
                }
            }
        }
        return f;
    }
};

PrunedLists prune_with(const AlgState& st, int n, const ListAssignment& lists) {
    PrunedLists out;
    out.forbidden.assign(static_cast<size_t>(n), 0);
    out.residual = lists.lists;
    uint32_t full = ListAssignment::full_mask(lists.k);
    for (int v = 0; v < n; ++v) {
        int i = st.slice_of[static_cast<size_t>(v)];
        if (i < 0) continue; // only N(S) is processed
        int pc = st.pinned(v);
        uint32_t f = pc >= 0 ? (full & ~(uint32_t{1} << pc)) : st.forbidden(v, i);
        out.forbidden[static_cast<size_t>(v)] = f;
        out.residual[static_cast<size_t>(v)] = lists.at(v) & ~f;
    }
    return out;
}

} // namespace

PrunedLists prune_lists(const WeightedGraph& g, const Canvas& q, const CanvasDerived& d,
                        const ListAssignment& lists) {
    AlgState st(g, q, d);
    return prune_with(st, g.n(), lists);
}

ColouredSolution generate_component(const WeightedGraph& g, const Canvas& q,
                                    const CanvasDerived& d, const ListAssignment& lists,
                                    const RecursiveSolver& solver) {
    AlgState st(g, q, d);
    PrunedLists pl = prune_with(st, g.n(), lists);
    ListAssignment pruned{lists.k, pl.residual};
    uint64_t nb_union = st.nb_union;

    ColouredSolution out = ColouredSolution::empty(g.n());
    for (int i = 0; i < q.t(); ++i) {
        int v = q.s[static_cast<size_t>(i)];
        out.vertices.set(v);
        out.colours[static_cast<size_t>(v)] = q.f[static_cast<size_t>(i)];
        out.total_weight = checked_add(out.total_weight, g.weight(v));
    }
    for (int i = 0; i < q.t(); ++i) {
        uint64_t slice_mask = d.x_parts[static_cast<size_t>(i)].low_word() & ~nb_union;
        if (!slice_mask) continue;
        VertexSet slice(g.n());
        slice.assign_low_word(slice_mask);
        ColouredSolution sub = solver(g, slice, pruned);
        sub.vertices.for_each([&](int v) {
            out.vertices.set(v);
            out.colours[static_cast<size_t>(v)] = sub.colours[static_cast<size_t>(v)];
        });
        out.total_weight = checked_add(out.total_weight, sub.total_weight);
    }
    return out;
}

ColouredSolution generate_component(const WeightedGraph& g, const Canvas& q,
                                    const ListAssignment& lists, const RecursiveSolver& solver) {
    return generate_component(g, q, derive(q, g), lists, solver);
}

namespace {

// Proper colouring existence with per-vertex allowed masks, backtracking in
// ascending member order, colours ascending.
bool colourable_with(const WeightedGraph& g, const std::vector<int>& members,
                     const std::vector<uint32_t>& allowed) {
    std::vector<int> colour(members.size(), -1);
    size_t pos = 0;
    while (true) {
        if (pos == members.size()) return true;
        int v = members[pos];
        uint32_t mask = allowed[static_cast<size_t>(v)];
        int c = colour[pos] + 1;
        int found = -1;
        for (; c < 32; ++c) {
            if (!((mask >> c) & 1)) continue;
            bool clash = false;
            for (size_t j = 0; j < pos; ++j)
                if (colour[j] == c && g.adjacent(v, members[j])) { clash = true; break; }
            if (!clash) { found = c; break; }
        }
        if (found >= 0) {
            colour[pos] = found;
            ++pos;
            if (pos < members.size()) colour[pos] = -1;
        } else {
            colour[pos] = -1;
            if (pos == 0) return false;
            --pos;
        }
    }
}

} // namespace

bool is_associated(const ColouredSolution& c_sub, const Canvas& q, const WeightedGraph& g,
                   const ListAssignment& lists) {
    CanvasDerived d = derive(q, g);
    AlgState st(g, q, d);
    const VertexSet& verts = c_sub.vertices;
    uint64_t vmask = verts.low_word();

    uint64_t s_mask = 0;
    for (int i = 0; i < q.t(); ++i) s_mask |= bit(q.s[static_cast<size_t>(i)]);
    if (s_mask & ~vmask) return false; // S inside C
    uint64_t outside = vmask & ~s_mask;
    if (outside & ~st.ns) return false; // S dominates C

    std::vector<uint32_t> allowed(static_cast<size_t>(g.n()), 0);
    for (int i = 0; i < q.t(); ++i)
        allowed[static_cast<size_t>(q.s[static_cast<size_t>(i)])] =
            uint32_t{1} << q.f[static_cast<size_t>(i)];
    for (uint64_t rest = outside; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if ((st.adj[static_cast<size_t>(v)] & st.b_union) || (st.b_union & bit(v)))
            return false; // anticomplete to the B sets
        int i = st.slice_of[static_cast<size_t>(v)];
        int pc = st.pinned(v);
        uint32_t m = pc >= 0 ? (lists.at(v) & (uint32_t{1} << pc))
                             : (lists.at(v) & ~st.forbidden(v, i));
        if (!m) return false;
        allowed[static_cast<size_t>(v)] = m;
    }
    return colourable_with(g, verts.to_vector(), allowed);
}

} // namespace wmkcis
