#include "wmkcis/hfree.hpp"

#include <sstream>

namespace wmkcis {

std::string Witness::describe() const {
    std::ostringstream os;
    os << "P5: " << path_vertices[0];
    for (int i = 1; i < 5; ++i) os << "-" << path_vertices[i];
    if (!isolated_vertices.empty()) {
        os << ", isolated:";
        for (int v : isolated_vertices) os << " " << v;
    }
    return os.str();
}

bool witness_is_valid(const WeightedGraph& g, const Witness& w, int r) {
    const auto& p = w.path_vertices;
    for (int i = 0; i < 5; ++i) {
        if (p[static_cast<size_t>(i)] < 0 || p[static_cast<size_t>(i)] >= g.n()) return false;
        for (int j = i + 1; j < 5; ++j) {
            bool want = (j == i + 1);
            if (g.adjacent(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]) != want) return false;
        }
    }
    if (static_cast<int>(w.isolated_vertices.size()) != r) return false;
    VertexSet taken(g.n());
    for (int v : p) taken.set(v);
    for (size_t a = 0; a < w.isolated_vertices.size(); ++a) {
        int u = w.isolated_vertices[a];
        if (u < 0 || u >= g.n() || taken.test(u)) return false;
        for (int v : p)
            if (g.adjacent(u, v)) return false;
        for (size_t b = a + 1; b < w.isolated_vertices.size(); ++b)
            if (g.adjacent(u, w.isolated_vertices[b])) return false;
        taken.set(u);
    }
    return true;
}

namespace {

// Enumerates induced P5s by ordered DFS with adjacency pruning, in ascending
// id order at every level; paths are canonicalised by first-end < last-end so
// each path is visited once. The visitor returns true to stop the search.
template <typename Fn>
bool for_each_induced_p5(const WeightedGraph& g, Fn&& visit) {
    int n = g.n();
    std::array<int, 5> path{};
    for (int a = 0; a < n; ++a) {
        path[0] = a;
        const VertexSet& na = g.neighbours(a);
        for (int b = na.first(); b >= 0; b = na.next(b)) {
            path[1] = b;
            VertexSet cs = g.neighbours(b) - na;
            cs.reset(a);
            for (int c = cs.first(); c >= 0; c = cs.next(c)) {
                path[2] = c;
                VertexSet ds = g.neighbours(c) - na;
                ds -= g.neighbours(b);
                for (int d = ds.first(); d >= 0; d = ds.next(d)) {
                    path[3] = d;
                    VertexSet es = g.neighbours(d) - na;
                    es -= g.neighbours(b);
                    es -= g.neighbours(c);
                    for (int e = es.first(); e >= 0; e = es.next(e)) {
                        if (e < a) continue; // canonical direction
                        path[4] = e;
                        if (visit(path)) return true;
                    }
                }
            }
        }
    }
    return false;
}

// Independent r-subset of cand by greedy DFS with backtracking, ascending ids.
bool find_independent_rset(const WeightedGraph& g, const VertexSet& cand, int r,
                           std::vector<int>& out) {
    if (static_cast<int>(out.size()) == r) return true;
    int from = out.empty() ? -1 : out.back();
    for (int v = from < 0 ? cand.first() : cand.next(from); v >= 0; v = cand.next(v)) {
        bool clash = false;
        for (int u : out)
            if (g.adjacent(u, v)) { clash = true; break; }
        if (clash) continue;
        out.push_back(v);
        if (find_independent_rset(g, cand, r, out)) return true;
        out.pop_back();
    }
    return false;
}

} // namespace

std::optional<Witness> find_induced_p5(const WeightedGraph& g) {
    std::optional<Witness> found;
    for_each_induced_p5(g, [&](const std::array<int, 5>& path) {
        found = Witness{path, {}};
        return true;
    });
    return found;
}

std::optional<Witness> check_free(const WeightedGraph& g, int r) {
    if (r < 0) throw InputError("check_free: r must be nonnegative");
    if (r == 0) return find_induced_p5(g);
    std::optional<Witness> found;
    for_each_induced_p5(g, [&](const std::array<int, 5>& path) {
        VertexSet closed(g.n());
        for (int v : path) {
            closed.set(v);
            closed |= g.neighbours(v);
        }
        VertexSet cand = g.all_vertices() - closed;
        std::vector<int> iso;
        if (find_independent_rset(g, cand, r, iso)) {
            found = Witness{path, std::move(iso)};
            return true;
        }
        return false;
    });
    return found;
}

} // namespace wmkcis
