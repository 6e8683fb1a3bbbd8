#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wmkcis/hfree.hpp"

namespace corpus {

WeightedGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return WeightedGraph(n, e);
}

WeightedGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return WeightedGraph(n, e);
}

WeightedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return WeightedGraph(n, e);
}

WeightedGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return WeightedGraph(leaves + 1, e);
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    std::vector<std::pair<int, int>> e;
    std::vector<Weight> w;
    for (int u = 0; u < a.n(); ++u) {
        w.push_back(a.weight(u));
        a.neighbours(u).for_each([&](int v) {
            if (v > u) e.emplace_back(u, v);
        });
    }
    for (int u = 0; u < b.n(); ++u) {
        w.push_back(b.weight(u));
        b.neighbours(u).for_each([&](int v) {
            if (v > u) e.emplace_back(a.n() + u, a.n() + v);
        });
    }
    return WeightedGraph(a.n() + b.n(), e, w);
}

WeightedGraph with_weights(const WeightedGraph& g, const std::vector<Weight>& w) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.n(); ++u)
        g.neighbours(u).for_each([&](int v) {
            if (v > u) e.emplace_back(u, v);
        });
    return WeightedGraph(g.n(), e, w);
}

namespace {

inline int pair_index(int i, int j) { // requires i < j
    return j * (j - 1) / 2 + i;
}

uint32_t permute_mask(uint32_t mask, int n, const std::vector<int>& perm) {
    uint32_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1) {
                int a = perm[static_cast<size_t>(i)], b = perm[static_cast<size_t>(j)];
                out |= uint32_t{1} << pair_index(std::min(a, b), std::max(a, b));
            }
    return out;
}

uint32_t canonical_mask(uint32_t mask, int n, const std::vector<std::vector<int>>& perms) {
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for (const auto& perm : perms) best = std::min(best, permute_mask(mask, n, perm));
    return best;
}

} // namespace

WeightedGraph graph_from_mask(int n, uint32_t mask) {
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1) e.emplace_back(i, j);
    return WeightedGraph(n, e);
}

uint32_t mask_from_graph(const WeightedGraph& g) {
    uint32_t mask = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j)) mask |= uint32_t{1} << pair_index(i, j);
    return mask;
}

const std::vector<uint32_t>& all_graph_masks(int n) {
    static const std::array<size_t, 8> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
    static std::vector<std::vector<uint32_t>> cache(1, std::vector<uint32_t>{0u});
    if (n < 0 || n > 7) throw std::invalid_argument("all_graph_masks: supports n <= 7");
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size()); // building graphs on m vertices
        std::vector<int> base(static_cast<size_t>(m));
        std::iota(base.begin(), base.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));

        std::set<uint32_t> out;
        for (uint32_t prev : cache[static_cast<size_t>(m - 1)])
            for (uint32_t nb = 0; nb < (uint32_t{1} << (m - 1)); ++nb) {
                uint32_t mask = prev;
                for (int i = 0; i < m - 1; ++i)
                    if ((nb >> i) & 1) mask |= uint32_t{1} << pair_index(i, m - 1);
                out.insert(canonical_mask(mask, m, perms));
            }
        std::vector<uint32_t> list(out.begin(), out.end());
        if (list.size() != expected[static_cast<size_t>(m)])
            throw std::logic_error("all_graph_masks: catalogue size self-check failed");
        cache.push_back(std::move(list));
    }
    return cache[static_cast<size_t>(n)];
}

std::vector<WeightedGraph> all_graphs(int n) {
    std::vector<WeightedGraph> out;
    for (uint32_t mask : all_graph_masks(n)) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<WeightedGraph> all_connected_graphs(int n) {
    std::vector<WeightedGraph> out;
    for (uint32_t mask : all_graph_masks(n)) {
        WeightedGraph g = graph_from_mask(n, mask);
        if (n > 0 && g.is_connected_set(g.all_vertices())) out.push_back(std::move(g));
    }
    return out;
}

bool naive_contains_p5rk1(const WeightedGraph& g, int r) {
    int n = g.n();
    int need = 5 + r;
    if (need > n) return false;
    std::vector<int> pick(static_cast<size_t>(need));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        // classify the induced subgraph on pick
        int isolated = 0;
        std::vector<int> nonzero;
        std::vector<int> deg(static_cast<size_t>(need), 0);
        for (int a = 0; a < need; ++a)
            for (int b = a + 1; b < need; ++b)
                if (g.adjacent(pick[static_cast<size_t>(a)], pick[static_cast<size_t>(b)])) {
                    ++deg[static_cast<size_t>(a)];
                    ++deg[static_cast<size_t>(b)];
                }
        for (int a = 0; a < need; ++a)
            if (deg[static_cast<size_t>(a)] == 0)
                ++isolated;
            else
                nonzero.push_back(pick[static_cast<size_t>(a)]);
        if (isolated == r && nonzero.size() == 5) {
            // the five remaining vertices must induce a path
            int ones = 0, twos = 0, edges = 0;
            for (size_t a = 0; a < 5; ++a) {
                int d = 0;
                for (size_t b = 0; b < 5; ++b)
                    if (a != b && g.adjacent(nonzero[a], nonzero[b])) ++d;
                if (d == 1) ++ones;
                if (d == 2) ++twos;
                edges += d;
            }
            VertexSet five(g.n());
            for (int v : nonzero) five.set(v);
            if (ones == 2 && twos == 3 && edges == 8 && g.is_connected_set(five)) return true;
        }
        // next combination
        int i = need - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - need + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
}

uint64_t rng_below(std::mt19937_64& rng, uint64_t m) {
    uint64_t lim = std::numeric_limits<uint64_t>::max() -
                   std::numeric_limits<uint64_t>::max() % m;
    uint64_t x;
    do {
        x = rng();
    } while (x >= lim);
    return x % m;
}

std::vector<Weight> random_weights(int n, Weight max_w, std::mt19937_64& rng) {
    std::vector<Weight> w(static_cast<size_t>(n));
    for (auto& x : w) x = rng_below(rng, max_w + 1);
    return w;
}

WeightedGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.emplace_back(i, j);
    return WeightedGraph(n, e);
}

WeightedGraph random_free_graph(int n, int r, std::mt19937_64& rng) {
    double p = 0.35;
    for (int attempt = 0;; ++attempt) {
        WeightedGraph g = random_graph(n, p, rng);
        if (!wmkcis::check_free(g, r)) return g;
        if (attempt % 8 == 7) p = std::min(0.95, p + 0.1); // denser graphs are freer
    }
}

namespace {

// Subsets of `ground` with at most `cap` members.
std::vector<VertexSet> subsets_upto(const VertexSet& ground, int cap) {
    std::vector<int> items = ground.to_vector();
    std::vector<VertexSet> out;
    uint32_t total = uint32_t{1} << items.size();
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (__builtin_popcount(mask) > cap) continue;
        VertexSet s(ground.universe());
        for (size_t i = 0; i < items.size(); ++i)
            if ((mask >> i) & 1) s.set(items[i]);
        out.push_back(std::move(s));
    }
    return out;
}

struct NaiveCounter {
    const WeightedGraph& g;
    const ListAssignment& lists;
    int k, r;
    uint64_t count = 0;
    std::vector<std::string>* sink = nullptr;

    void run() {
        int n = g.n();
        int bound = wmkcis::size_bound(k, r);
        for (const VertexSet& s_set : wmkcis::connected_sets_upto(g, bound)) {
            std::vector<int> order = s_set.to_vector();
            do {
                per_ordering(order);
            } while (std::next_permutation(order.begin(), order.end()));
        }
        (void)n;
    }

    void per_ordering(const std::vector<int>& order) {
        int t = static_cast<int>(order.size());
        wmkcis::Canvas q =
            wmkcis::Canvas::make(g.n(), k, r, order, std::vector<int>(order.size(), 0));
        wmkcis::CanvasDerived d = wmkcis::derive(q, g);
        VertexSet s_set(g.n());
        for (int v : order) s_set.set(v);
        VertexSet ns = g.neighbourhood(s_set);

        // raw per-field domains
        std::vector<std::vector<VertexSet>> a_dom(static_cast<size_t>(k), subsets_upto(ns, 2 * k));
        std::vector<std::vector<VertexSet>> b_dom(static_cast<size_t>(k), subsets_upto(d.m, r));
        std::vector<std::vector<VertexSet>> z_dom, y_dom;
        for (int i = 0; i < t; ++i) {
            auto zs = subsets_upto(d.x_parts[static_cast<size_t>(i)], r);
            auto ys = subsets_upto(d.x_parts[static_cast<size_t>(i)], 2);
            for (int c = 0; c < k; ++c) {
                z_dom.push_back(zs);
                for (int l = i + 1; l < t; ++l) y_dom.push_back(ys);
            }
        }

        std::vector<int> f(order.size(), 0);
        while (true) {
            q.f = f;
            fill_a(q, d, a_dom, b_dom, z_dom, y_dom, 0);
            // next f tuple
            size_t pos = 0;
            while (pos < f.size() && ++f[pos] == k) f[pos++] = 0;
            if (pos == f.size()) break;
        }
    }

    void fill_a(wmkcis::Canvas& q, const wmkcis::CanvasDerived& d,
                const std::vector<std::vector<VertexSet>>& a_dom,
                const std::vector<std::vector<VertexSet>>& b_dom,
                const std::vector<std::vector<VertexSet>>& z_dom,
                const std::vector<std::vector<VertexSet>>& y_dom, int c) {
        if (c == k) {
            fill_b(q, d, b_dom, z_dom, y_dom, 0);
            return;
        }
        for (const VertexSet& s : a_dom[static_cast<size_t>(c)]) {
            q.a_sets[static_cast<size_t>(c)] = s;
            fill_a(q, d, a_dom, b_dom, z_dom, y_dom, c + 1);
        }
    }

    void fill_b(wmkcis::Canvas& q, const wmkcis::CanvasDerived& d,
                const std::vector<std::vector<VertexSet>>& b_dom,
                const std::vector<std::vector<VertexSet>>& z_dom,
                const std::vector<std::vector<VertexSet>>& y_dom, int c) {
        if (c == k) {
            fill_z(q, d, z_dom, y_dom, 0);
            return;
        }
        for (const VertexSet& s : b_dom[static_cast<size_t>(c)]) {
            q.b_sets[static_cast<size_t>(c)] = s;
            fill_b(q, d, b_dom, z_dom, y_dom, c + 1);
        }
    }

    void fill_z(wmkcis::Canvas& q, const wmkcis::CanvasDerived& d,
                const std::vector<std::vector<VertexSet>>& z_dom,
                const std::vector<std::vector<VertexSet>>& y_dom, int idx) {
        int t = q.t();
        if (idx == t * k) {
            fill_y(q, d, y_dom, 0, 0);
            return;
        }
        for (const VertexSet& s : z_dom[static_cast<size_t>(idx)]) {
            q.z_sets[static_cast<size_t>(idx)] = s;
            fill_z(q, d, z_dom, y_dom, idx + 1);
        }
    }

    // y slots enumerate in the same flattened (i, c, l) order used to build
    // y_dom; slot maps back via an explicit walk.
    void fill_y(wmkcis::Canvas& q, const wmkcis::CanvasDerived& d,
                const std::vector<std::vector<VertexSet>>& y_dom, int slot, int checked) {
        int t = q.t();
        (void)checked;
        int seen = 0;
        for (int i = 0; i < t; ++i)
            for (int c = 0; c < k; ++c)
                for (int l = i + 1; l < t; ++l) {
                    if (seen++ != slot) continue;
                    // |Z_{l,c}| < r forces Y empty (generation convention)
                    if (q.z(l, c).count() < r) {
                        q.y(i, c, l) = VertexSet(g.n());
                        fill_y(q, d, y_dom, slot + 1, 0);
                        return;
                    }
                    for (const VertexSet& s : y_dom[static_cast<size_t>(slot)]) {
                        q.y(i, c, l) = s;
                        fill_y(q, d, y_dom, slot + 1, 0);
                    }
                    return;
                }
        // all slots filled
        if (wmkcis::validate(q, g, lists, k, r).ok) {
            ++count;
            if (sink) sink->push_back(canvas_signature(q));
        }
    }
};

} // namespace

uint64_t naive_count_canvases(const WeightedGraph& g, const ListAssignment& lists, int k, int r) {
    NaiveCounter nc{g, lists, k, r};
    nc.run();
    return nc.count;
}

std::string canvas_signature(const wmkcis::Canvas& q) {
    std::string out = "S";
    for (int v : q.s) out += " " + std::to_string(v);
    out += " f";
    for (int c : q.f) out += " " + std::to_string(c);
    auto add_set = [&out](const VertexSet& s) {
        out += " [";
        s.for_each([&out](int v) { out += std::to_string(v) + ","; });
        out += "]";
    };
    for (const auto& a : q.a_sets) add_set(a);
    for (const auto& b : q.b_sets) add_set(b);
    for (int i = 0; i < q.t(); ++i)
        for (int c = 0; c < q.k; ++c) {
            add_set(q.z(i, c));
            for (int l = i + 1; l < q.t(); ++l) add_set(q.y(i, c, l));
        }
    return out;
}

std::vector<std::string> naive_collect_canvases(const WeightedGraph& g,
                                                const ListAssignment& lists, int k, int r) {
    std::vector<std::string> out;
    NaiveCounter nc{g, lists, k, r, 0, &out};
    nc.run();
    return out;
}

} // namespace corpus
