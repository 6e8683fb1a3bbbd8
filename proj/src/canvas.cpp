#include "wmkcis/canvas.hpp"

#include <algorithm>
#include <sstream>

namespace wmkcis {

int size_bound(int k, int r) {
    if (k < 1 || r < 0) throw InputError("size_bound: need k >= 1 and r >= 0");
    int general = (k + 2) * (r - 1) + 5;
    int p5_floor = std::max(k, 3);
    return std::max(general, p5_floor);
}

Canvas Canvas::make(int n, int k, int r, std::vector<int> s_order, std::vector<int> colours) {
    Canvas q;
    q.k = k;
    q.r = r;
    q.s = std::move(s_order);
    q.f = std::move(colours);
    int t = q.t();
    q.a_sets.assign(static_cast<size_t>(k), VertexSet(n));
    q.b_sets.assign(static_cast<size_t>(k), VertexSet(n));
    q.z_sets.assign(static_cast<size_t>(t * k), VertexSet(n));
    q.y_sets.assign(static_cast<size_t>(t * k * t), VertexSet(n));
    return q;
}

CanvasDerived derive(const Canvas& q, const WeightedGraph& g) {
    int n = g.n();
    int t = q.t();
    VertexSet s_set(n);
    for (int v : q.s) s_set.set(v);
    CanvasDerived d;
    d.x_parts.reserve(static_cast<size_t>(t));
    VertexSet used = s_set;
    for (int i = 0; i < t; ++i) {
        VertexSet xi = g.neighbours(q.s[static_cast<size_t>(i)]) - used;
        used |= xi;
        d.x_parts.push_back(xi);
    }
    d.m = g.all_vertices() - s_set - g.neighbourhood(s_set);
    d.w = VertexSet(n);
    std::vector<int> full_classes;
    for (int c = 0; c < q.k; ++c)
        if (q.b_sets[static_cast<size_t>(c)].count() == q.r) full_classes.push_back(c);
    d.m.for_each([&](int v) {
        for (int c : full_classes)
            if (!g.neighbours(v).intersects(q.b_sets[static_cast<size_t>(c)])) return;
        d.w.set(v);
    });
    return d;
}

namespace {

ValidationReport fail(const char* label, std::string detail) {
    return {false, label, std::move(detail)};
}

std::string ic_tag(int i, int c) {
    std::ostringstream os;
    os << "i=" << i + 1 << ", c=" << c + 1;
    return os.str();
}

} // namespace

ValidationReport validate(const Canvas& q, const WeightedGraph& g, const ListAssignment& lists,
                          int k, int r) {
    lists.validate_against(g);
    int n = g.n();
    int t = q.t();
    if (q.k != k || q.r != r) throw InputError("validate: canvas k/r mismatch");
    if (static_cast<int>(q.f.size()) != t) throw InputError("validate: |f| != |S|");
    if (static_cast<int>(q.a_sets.size()) != k || static_cast<int>(q.b_sets.size()) != k ||
        static_cast<int>(q.z_sets.size()) != t * k ||
        static_cast<int>(q.y_sets.size()) != t * k * t)
        throw InputError("validate: family container sizes do not match t and k");
    VertexSet s_set(n);
    for (int v : q.s) {
        if (v < 0 || v >= n) throw InputError("validate: S vertex out of range");
        if (s_set.test(v)) throw InputError("validate: duplicate vertex in S");
        s_set.set(v);
    }
    for (int c : q.f)
        if (c < 0 || c >= k) throw InputError("validate: colour out of range in f");
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < k; ++c)
            for (int l = 0; l <= i; ++l)
                if (q.y(i, c, l).any())
                    throw InputError("validate: Y set present for indices i >= l");

    // (Set S)
    if (t == 0) return fail("(Set S)", "S is empty");
    if (t > size_bound(k, r))
        return fail("(Set S)", "|S| exceeds the size bound");
    if (!g.is_connected_set(s_set)) return fail("(Set S)", "G[S] is not connected");

    CanvasDerived d = derive(q, g);
    VertexSet ns = g.neighbourhood(s_set);

    // (Col. f)
    for (int i = 0; i < t; ++i) {
        int vi = q.s[static_cast<size_t>(i)];
        if (!lists.allows(vi, q.f[static_cast<size_t>(i)]))
            return fail("(Col. f)", "f assigns a colour outside L(v)");
        for (int j = i + 1; j < t; ++j)
            if (g.adjacent(vi, q.s[static_cast<size_t>(j)]) &&
                q.f[static_cast<size_t>(i)] == q.f[static_cast<size_t>(j)])
                return fail("(Col. f)", "f is not proper on G[S]");
    }

    auto list_ok = [&](const VertexSet& set, int c) {
        for (int v = set.first(); v >= 0; v = set.next(v))
            if (!lists.allows(v, c)) return false;
        return true;
    };

    // (Sets A)
    for (int c = 0; c < k; ++c) {
        const VertexSet& a = q.a_sets[static_cast<size_t>(c)];
        if (a.count() > 2 * k) return fail("(Sets A)", "|A_c| > 2k for c=" + std::to_string(c + 1));
        if (!a.is_subset_of(ns)) return fail("(Sets A)", "A_c not inside N(S)");
        if (!g.is_independent(a)) return fail("(Sets A)", "A_c is not independent");
        if (!list_ok(a, c)) return fail("(Sets A)", "A_c contains v with c not in L(v)");
    }
    // (Sets B)
    for (int c = 0; c < k; ++c) {
        const VertexSet& b = q.b_sets[static_cast<size_t>(c)];
        if (b.count() > r) return fail("(Sets B)", "|B_c| > r for c=" + std::to_string(c + 1));
        if (!b.is_subset_of(d.m)) return fail("(Sets B)", "B_c not inside V \\ (S u N(S))");
        if (!g.is_independent(b)) return fail("(Sets B)", "B_c is not independent");
        if (!list_ok(b, c)) return fail("(Sets B)", "B_c contains v with c not in L(v)");
    }
    // (Sets Y)
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < k; ++c)
            for (int l = i + 1; l < t; ++l) {
                const VertexSet& y = q.y(i, c, l);
                if (y.count() > 2) return fail("(Sets Y)", "|Y| > 2 at " + ic_tag(i, c));
                if (!y.is_subset_of(d.x_parts[static_cast<size_t>(i)]))
                    return fail("(Sets Y)", "Y not inside X_i at " + ic_tag(i, c));
                if (!g.is_independent(y)) return fail("(Sets Y)", "Y not independent at " + ic_tag(i, c));
                if (!list_ok(y, c)) return fail("(Sets Y)", "Y list violation at " + ic_tag(i, c));
            }
    // (Sets Z)
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < k; ++c) {
            const VertexSet& z = q.z(i, c);
            if (z.count() > r) return fail("(Sets Z)", "|Z| > r at " + ic_tag(i, c));
            if (!z.is_subset_of(d.x_parts[static_cast<size_t>(i)]))
                return fail("(Sets Z)", "Z not inside X_i at " + ic_tag(i, c));
            if (!g.is_independent(z)) return fail("(Sets Z)", "Z not independent at " + ic_tag(i, c));
            if (!list_ok(z, c)) return fail("(Sets Z)", "Z list violation at " + ic_tag(i, c));
        }
    // (Small Z)
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < k; ++c) {
            const VertexSet& z = q.z(i, c);
            if (z.count() >= r) continue;
            for (int l = i + 1; l < t; ++l)
                if (!q.y(i, c, l).is_subset_of(z))
                    return fail("(Small Z)", "Y not inside small Z at " + ic_tag(i, c));
            VertexSet ax = q.a_sets[static_cast<size_t>(c)] & d.x_parts[static_cast<size_t>(i)];
            if (!ax.is_subset_of(z))
                return fail("(Small Z)", "A_c cap X_i not inside small Z at " + ic_tag(i, c));
        }
    // (Disjoint)
    for (int c = 0; c < k; ++c)
        for (int cc = 0; cc < k; ++cc) {
            if (c == cc) continue;
            if (cc > c) {
                if (q.a_sets[static_cast<size_t>(c)].intersects(q.a_sets[static_cast<size_t>(cc)]))
                    return fail("(Disjoint)", "A sets of distinct colours intersect");
                if (q.b_sets[static_cast<size_t>(c)].intersects(q.b_sets[static_cast<size_t>(cc)]))
                    return fail("(Disjoint)", "B sets of distinct colours intersect");
                for (int i = 0; i < t; ++i) {
                    if (q.z(i, c).intersects(q.z(i, cc)))
                        return fail("(Disjoint)", "Z sets of distinct colours intersect");
                    for (int l = i + 1; l < t; ++l)
                        if (q.y(i, c, l).intersects(q.y(i, cc, l)))
                            return fail("(Disjoint)", "Y sets of distinct colours intersect");
                }
            }
            for (int i = 0; i < t; ++i) {
                if (q.a_sets[static_cast<size_t>(c)].intersects(q.z(i, cc)))
                    return fail("(Disjoint)", "A_c intersects Z of another colour");
                for (int l = i + 1; l < t; ++l) {
                    if (q.a_sets[static_cast<size_t>(c)].intersects(q.y(i, cc, l)))
                        return fail("(Disjoint)", "A_c intersects Y of another colour");
                    if (q.y(i, c, l).intersects(q.z(i, cc)))
                        return fail("(Disjoint)", "Y intersects Z of another colour");
                }
            }
        }
    // (Colour)
    for (int c = 0; c < k; ++c) {
        VertexSet cls(n);
        for (int i = 0; i < t; ++i)
            if (q.f[static_cast<size_t>(i)] == c) cls.set(q.s[static_cast<size_t>(i)]);
        cls |= q.a_sets[static_cast<size_t>(c)];
        for (int i = 0; i < t; ++i) {
            cls |= q.z(i, c);
            for (int l = i + 1; l < t; ++l) cls |= q.y(i, c, l);
        }
        if (!g.is_independent(cls))
            return fail("(Colour)", "colour class " + std::to_string(c + 1) + " is not independent");
    }
    // (Comps.)
    {
        VertexSet bs(n), rest(n);
        for (int c = 0; c < k; ++c) {
            bs |= q.b_sets[static_cast<size_t>(c)];
            rest |= q.a_sets[static_cast<size_t>(c)];
            for (int i = 0; i < t; ++i) {
                rest |= q.z(i, c);
                for (int l = i + 1; l < t; ++l) rest |= q.y(i, c, l);
            }
        }
        if (!is_anticomplete(g, bs, rest))
            return fail("(Comps.)", "some B_c touches the A/Y/Z guesses");
    }
    return {};
}

namespace {

constexpr int kEnumLimit = 64;

inline uint64_t bit(int v) { return uint64_t{1} << v; }

struct MaskGraph {
    int n = 0;
    uint64_t all = 0;
    std::vector<uint64_t> adj;

    static MaskGraph from(const WeightedGraph& g) {
        if (g.n() > kEnumLimit)
            throw InputError("canvas enumeration supports at most 64 vertices");
        MaskGraph m;
        m.n = g.n();
        m.adj.assign(static_cast<size_t>(g.n()), 0);
        for (int v = 0; v < g.n(); ++v) {
            uint64_t w = 0;
            g.neighbours(v).for_each([&](int u) { w |= bit(u); });
            m.adj[static_cast<size_t>(v)] = w;
        }
        m.all = g.n() == 64 ? ~uint64_t{0} : bit(g.n()) - 1;
        return m;
    }

    uint64_t nbrs_of(uint64_t set) const {
        uint64_t out = 0;
        while (set) {
            int v = __builtin_ctzll(set);
            set &= set - 1;
            out |= adj[static_cast<size_t>(v)];
        }
        return out;
    }
};

// Full family enumeration below one fixed (ordered S, f). Families are
// produced in stage order A, B, Z, Y, each stage walking subsets in lex
// order (empty set first, then extensions by ascending vertex id), with the
// canvas conditions enforced incrementally so no invalid tuple is ever built.
struct CanvasEnumerator {
    const WeightedGraph& g;
    const ListAssignment& lists;
    int k, r, n;
    MaskGraph mg;
    const CanvasYield& yield;
    EnumerateOptions opts;
    bool stopped = false;

    std::vector<uint64_t> eligible; // per colour: {v : c in L(v)}

    Canvas q;
    CanvasDerived d;

    // per-ordering state
    int t = 0;
    std::vector<uint64_t> x;
    uint64_t s_mask = 0, ns_mask = 0, m_mask = 0;

    // per-f state
    std::vector<uint64_t> sclass, nsclass;

    // family state
    std::vector<uint64_t> a, b, zm;
    std::vector<char> z_small;
    std::vector<uint64_t> cls, cls_n;
    std::vector<uint64_t> xz; // per (l*k+c): X_l \ N(Z_{l,c}); minimal-families mode
    uint64_t a_union = 0, na_union = 0, b_union = 0, nb_union = 0, mw_mask = 0;
    uint64_t a_cand_filter = 0;
    bool prune = false;
    int cap_a = 0;
    struct Triple { int i, c, l; };
    std::vector<Triple> triples;

    // Every member must keep a private neighbour inside `target` that no
    // other member reaches; once lost it cannot be regained, so a failing
    // set prunes all of its extensions too.
    bool irredundant(uint64_t chosen, uint64_t target) const {
        for (uint64_t rest = chosen; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            uint64_t priv = mg.adj[static_cast<size_t>(v)] & target;
            for (uint64_t others = chosen & ~bit(v); priv && others;) {
                int u = __builtin_ctzll(others);
                others &= others - 1;
                priv &= ~mg.adj[static_cast<size_t>(u)];
            }
            if (!priv) return false;
        }
        return true;
    }

    CanvasEnumerator(const WeightedGraph& g_, const ListAssignment& lists_, int k_, int r_,
                     const CanvasYield& yield_, const EnumerateOptions& opts_)
        : g(g_), lists(lists_), k(k_), r(r_), n(g_.n()), mg(MaskGraph::from(g_)),
          yield(yield_), opts(opts_) {
        lists.validate_against(g);
        if (lists.k != k) throw InputError("enumerate_canvases: lists.k != k");
        eligible.assign(static_cast<size_t>(k), 0);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c)
                if (lists.allows(v, c)) eligible[static_cast<size_t>(c)] |= bit(v);
        sclass.assign(static_cast<size_t>(k), 0);
        nsclass.assign(static_cast<size_t>(k), 0);
        a.assign(static_cast<size_t>(k), 0);
        b.assign(static_cast<size_t>(k), 0);
        cls.assign(static_cast<size_t>(k), 0);
        cls_n.assign(static_cast<size_t>(k), 0);
        cap_a = 2 * k;
        prune = opts.minimal_families;
    }

    void run_set(const VertexSet& s_set) {
        std::vector<int> order = s_set.to_vector();
        if (order.empty() || !g.is_connected_set(s_set)) return;
        do {
            run_ordering(order);
            if (stopped) return;
        } while (!opts.canonical_orderings && std::next_permutation(order.begin(), order.end()));
    }

    void run_ordering(const std::vector<int>& order) {
        t = static_cast<int>(order.size());
        q = Canvas::make(n, k, r, order, std::vector<int>(static_cast<size_t>(t), 0));
        s_mask = 0;
        for (int v : order) s_mask |= bit(v);
        x.assign(static_cast<size_t>(t), 0);
        uint64_t used = s_mask;
        for (int i = 0; i < t; ++i) {
            x[static_cast<size_t>(i)] = mg.adj[static_cast<size_t>(order[static_cast<size_t>(i)])] & ~used;
            used |= x[static_cast<size_t>(i)];
        }
        ns_mask = used & ~s_mask;
        m_mask = mg.all & ~used;

        d.x_parts.assign(static_cast<size_t>(t), VertexSet(n));
        for (int i = 0; i < t; ++i)
            d.x_parts[static_cast<size_t>(i)].assign_low_word(x[static_cast<size_t>(i)]);
        d.m = VertexSet(n);
        d.m.assign_low_word(m_mask);
        d.w = VertexSet(n);

        zm.assign(static_cast<size_t>(t * k), 0);
        z_small.assign(static_cast<size_t>(t * k), static_cast<char>(r > 0));
        xz.assign(static_cast<size_t>(t * k), 0);
        triples.clear();
        for (int i = 0; i < t; ++i)
            for (int c = 0; c < k; ++c)
                for (int l = i + 1; l < t; ++l) triples.push_back({i, c, l});

        choose_f(0);
    }

    void choose_f(int pos) {
        if (stopped) return;
        if (pos == t) {
            for (int c = 0; c < k; ++c) {
                uint64_t sc = 0;
                for (int i = 0; i < t; ++i)
                    if (q.f[static_cast<size_t>(i)] == c) sc |= bit(q.s[static_cast<size_t>(i)]);
                sclass[static_cast<size_t>(c)] = sc;
                nsclass[static_cast<size_t>(c)] = mg.nbrs_of(sc);
            }
            if (prune) {
                b_union = 0;
                stage_b(0);
            } else {
                a_union = 0;
                stage_a(0);
            }
            return;
        }
        int v = q.s[static_cast<size_t>(pos)];
        uint32_t lv = lists.at(v);
        while (lv) {
            int c = __builtin_ctz(lv);
            lv &= lv - 1;
            bool proper = true;
            for (int j = 0; j < pos; ++j)
                if (q.f[static_cast<size_t>(j)] == c &&
                    g.adjacent(q.s[static_cast<size_t>(j)], v)) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            q.f[static_cast<size_t>(pos)] = c;
            choose_f(pos + 1);
            if (stopped) return;
        }
    }

    // ---- stage A -------------------------------------------------------

    void stage_a(int c) {
        if (stopped) return;
        if (c == k) {
            if (prune)
                start_z();
            else
                start_b();
            return;
        }
        uint64_t ground = ns_mask & eligible[static_cast<size_t>(c)] &
                          ~nsclass[static_cast<size_t>(c)] & ~a_union;
        if (prune) ground &= a_cand_filter & ~nb_union;
        a_subsets(c, ground, 0, 0);
    }

    void a_subsets(int c, uint64_t cand, uint64_t chosen, int cnt) {
        if (prune && !irredundant(chosen, mw_mask)) return;
        uint64_t save_au = a_union;
        a[static_cast<size_t>(c)] = chosen;
        a_union |= chosen;
        cls[static_cast<size_t>(c)] = chosen;
        cls_n[static_cast<size_t>(c)] = mg.nbrs_of(chosen);
        q.a_sets[static_cast<size_t>(c)].assign_low_word(chosen);
        stage_a(c + 1);
        a_union = save_au;
        if (stopped || cnt == cap_a) return;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            a_subsets(c, cand & ~mg.adj[static_cast<size_t>(v)], chosen | bit(v), cnt + 1);
            if (stopped) return;
        }
    }

    // ---- stage B -------------------------------------------------------

    void start_b() {
        na_union = mg.nbrs_of(a_union);
        b_union = 0;
        stage_b(0);
    }

    void stage_b(int c) {
        if (stopped) return;
        if (c == k) {
            finish_b();
            return;
        }
        if (r == 0) { // all B forced empty
            b[static_cast<size_t>(c)] = 0;
            q.b_sets[static_cast<size_t>(c)].assign_low_word(0);
            stage_b(c + 1);
            return;
        }
        uint64_t ground = m_mask & eligible[static_cast<size_t>(c)] & ~b_union;
        if (!prune) ground &= ~na_union; // A chosen first in the plain order
        b_subsets(c, ground, 0, 0);
    }

    void b_subsets(int c, uint64_t cand, uint64_t chosen, int cnt) {
        uint64_t save_bu = b_union;
        b[static_cast<size_t>(c)] = chosen;
        b_union |= chosen;
        q.b_sets[static_cast<size_t>(c)].assign_low_word(chosen);
        stage_b(c + 1);
        b_union = save_bu;
        if (stopped || cnt == r) return;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            b_subsets(c, cand & ~mg.adj[static_cast<size_t>(v)], chosen | bit(v), cnt + 1);
            if (stopped) return;
        }
    }

    void finish_b() {
        nb_union = mg.nbrs_of(b_union);
        uint64_t w_mask = 0;
        if (r == 0) {
            // every colour class is trivially full, and no vertex meets them
            w_mask = k == 0 ? m_mask : 0;
        } else {
            uint64_t rest = m_mask;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                bool in_w = true;
                for (int c = 0; c < k && in_w; ++c)
                    if (__builtin_popcountll(b[static_cast<size_t>(c)]) == r &&
                        !(mg.adj[static_cast<size_t>(v)] & b[static_cast<size_t>(c)]))
                        in_w = false;
                if (in_w) w_mask |= bit(v);
            }
        }
        mw_mask = m_mask & ~w_mask;
        d.w.assign_low_word(w_mask);
        if (prune) {
            // members of A_c need a private neighbour in M \ W
            a_cand_filter = 0;
            for (uint64_t rest = ns_mask; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if (mg.adj[static_cast<size_t>(v)] & mw_mask) a_cand_filter |= bit(v);
            }
            a_union = 0;
            stage_a(0);
        } else {
            start_z();
        }
    }

    void start_z() {
        if (r == 0)
            finish_z(); // all Z forced empty, z_small all false
        else
            stage_z(0);
    }

    void finish_z() {
        if (prune)
            for (int l = 0; l < t; ++l)
                for (int c = 0; c < k; ++c)
                    xz[static_cast<size_t>(l * k + c)] =
                        x[static_cast<size_t>(l)] & ~mg.nbrs_of(zm[static_cast<size_t>(l * k + c)]);
        stage_y(0);
    }

    // ---- stage Z -------------------------------------------------------

    void stage_z(int idx) {
        if (stopped) return;
        if (idx == t * k) {
            finish_z();
            return;
        }
        int i = idx / k, c = idx % k;
        uint64_t other_a = a_union & ~a[static_cast<size_t>(c)];
        uint64_t other_z = 0;
        for (int cc = 0; cc < c; ++cc) other_z |= zm[static_cast<size_t>(i * k + cc)];
        uint64_t ground = x[static_cast<size_t>(i)] & eligible[static_cast<size_t>(c)] &
                          ~nsclass[static_cast<size_t>(c)] & ~nb_union & ~other_a & ~other_z;
        // members may reuse vertices already in the colour class (A_c), else
        // must avoid its neighbourhood
        ground &= cls[static_cast<size_t>(c)] | ~cls_n[static_cast<size_t>(c)];
        z_subsets(idx, i, c, ground, 0, 0);
    }

    void z_subsets(int idx, int i, int c, uint64_t cand, uint64_t chosen, int cnt) {
        // (Small Z): a short Z must absorb A_c cap X_i
        bool small = cnt < r;
        if (!small || (a[static_cast<size_t>(c)] & x[static_cast<size_t>(i)] & ~chosen) == 0) {
            uint64_t save_cls = cls[static_cast<size_t>(c)];
            uint64_t save_n = cls_n[static_cast<size_t>(c)];
            zm[static_cast<size_t>(idx)] = chosen;
            z_small[static_cast<size_t>(idx)] = static_cast<char>(small);
            cls[static_cast<size_t>(c)] |= chosen;
            cls_n[static_cast<size_t>(c)] |= mg.nbrs_of(chosen);
            q.z(i, c).assign_low_word(chosen);
            stage_z(idx + 1);
            cls[static_cast<size_t>(c)] = save_cls;
            cls_n[static_cast<size_t>(c)] = save_n;
        }
        if (stopped || cnt == r) return;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            uint64_t nxt = cand & ~mg.adj[static_cast<size_t>(v)];
            // new members must stay compatible with the growing class
            if (!(cls[static_cast<size_t>(c)] & bit(v)))
                nxt &= cls[static_cast<size_t>(c)] | ~(cls_n[static_cast<size_t>(c)] | mg.adj[static_cast<size_t>(v)]);
            z_subsets(idx, i, c, nxt, chosen | bit(v), cnt + 1);
            if (stopped) return;
        }
    }

    // ---- stage Y -------------------------------------------------------

    void stage_y(size_t yi) {
        if (stopped) return;
        if (yi == triples.size()) {
            emit();
            return;
        }
        auto [i, c, l] = triples[yi];
        if (z_small[static_cast<size_t>(l * k + c)]) {
            // only canvases with Y empty here can be optimal
            q.y(i, c, l).assign_low_word(0);
            stage_y(yi + 1);
            return;
        }
        uint64_t other_a = a_union & ~a[static_cast<size_t>(c)];
        uint64_t other_z = 0, other_y = 0;
        for (int cc = 0; cc < k; ++cc) {
            if (cc == c) continue;
            other_z |= zm[static_cast<size_t>(i * k + cc)];
            if (cc < c) other_y |= q.y(i, cc, l).low_word();
        }
        uint64_t ground = x[static_cast<size_t>(i)] & eligible[static_cast<size_t>(c)] &
                          ~nb_union & ~other_a & ~other_z & ~other_y;
        if (z_small[static_cast<size_t>(i * k + c)])
            ground &= zm[static_cast<size_t>(i * k + c)]; // (Small Z)
        ground &= cls[static_cast<size_t>(c)] |
                  ~(cls_n[static_cast<size_t>(c)] | nsclass[static_cast<size_t>(c)]);
        if (prune) {
            // members need a private neighbour in X_l \ N(Z_{l,c})
            uint64_t target = xz[static_cast<size_t>(l * k + c)];
            uint64_t filtered = 0;
            for (uint64_t rest = ground; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if (mg.adj[static_cast<size_t>(v)] & target) filtered |= bit(v);
            }
            ground = filtered;
        }
        y_subsets(yi, i, c, l, ground, 0, 0);
    }

    void y_subsets(size_t yi, int i, int c, int l, uint64_t cand, uint64_t chosen, int cnt) {
        if (prune && !irredundant(chosen, xz[static_cast<size_t>(l * k + c)])) return;
        uint64_t save_cls = cls[static_cast<size_t>(c)];
        uint64_t save_n = cls_n[static_cast<size_t>(c)];
        cls[static_cast<size_t>(c)] |= chosen;
        cls_n[static_cast<size_t>(c)] |= mg.nbrs_of(chosen);
        q.y(i, c, l).assign_low_word(chosen);
        stage_y(yi + 1);
        cls[static_cast<size_t>(c)] = save_cls;
        cls_n[static_cast<size_t>(c)] = save_n;
        if (stopped || cnt == 2) return;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            uint64_t nxt = cand & ~mg.adj[static_cast<size_t>(v)];
            if (!(cls[static_cast<size_t>(c)] & bit(v)))
                nxt &= cls[static_cast<size_t>(c)] | ~(cls_n[static_cast<size_t>(c)] | mg.adj[static_cast<size_t>(v)]);
            y_subsets(yi, i, c, l, nxt, chosen | bit(v), cnt + 1);
            if (stopped) return;
        }
    }

    void emit() {
        if (!yield(q, d)) stopped = true;
    }
};

} // namespace

std::vector<VertexSet> connected_sets_upto(const WeightedGraph& g, int max_size) {
    std::vector<VertexSet> out;
    int n = g.n();
    max_size = std::min(max_size, n);
    std::vector<int> idx;
    for (int size = 1; size <= max_size; ++size) {
        idx.resize(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            VertexSet s(n);
            for (int v : idx) s.set(v);
            if (g.is_connected_set(s)) out.push_back(s);
            int i = size - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

void enumerate_canvases_for_set(const WeightedGraph& g, const ListAssignment& lists, int k,
                                int r, const VertexSet& s_set, const CanvasYield& yield,
                                const EnumerateOptions& opts) {
    if (k < 1 || r < 0) throw InputError("enumerate_canvases: need k >= 1 and r >= 0");
    CanvasEnumerator e(g, lists, k, r, yield, opts);
    e.run_set(s_set);
}

void enumerate_canvases(const WeightedGraph& g, const ListAssignment& lists, int k, int r,
                        const CanvasYield& yield, const EnumerateOptions& opts) {
    if (k < 1 || r < 0) throw InputError("enumerate_canvases: need k >= 1 and r >= 0");
    CanvasEnumerator e(g, lists, k, r, yield, opts);
    for (const VertexSet& s : connected_sets_upto(g, size_bound(k, r))) {
        e.run_set(s);
        if (e.stopped) return;
    }
}

uint64_t count_canvases(const WeightedGraph& g, const ListAssignment& lists, int k, int r,
                        const EnumerateOptions& opts) {
    uint64_t count = 0;
    enumerate_canvases(g, lists, k, r,
                       [&](const Canvas&, const CanvasDerived&) {
                           ++count;
                           return true;
                       },
                       opts);
    return count;
}

std::optional<VertexSet> find_small_connected_dominating_set(const WeightedGraph& g, int k, int r) {
    int bound = size_bound(k, r);
    VertexSet all = g.all_vertices();
    for (const VertexSet& s : connected_sets_upto(g, bound)) {
        if ((s | g.neighbourhood(s)) == all) return s;
    }
    return std::nullopt;
}

} // namespace wmkcis
