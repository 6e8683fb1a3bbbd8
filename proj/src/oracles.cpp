#include "wmkcis/oracles.hpp"

namespace wmkcis {

namespace {

// List-colourability of the vertices in `mask`, restricted to g.
std::optional<std::vector<int>> colour_subset(const WeightedGraph& g, const ListAssignment& lists,
                                              const std::vector<int>& members) {
    std::vector<int> colour(members.size(), -1);
    size_t pos = 0;
    while (true) {
        if (pos == members.size()) {
            std::vector<int> full(static_cast<size_t>(g.n()), -1);
            for (size_t i = 0; i < members.size(); ++i)
                full[static_cast<size_t>(members[i])] = colour[i];
            return full;
        }
        int v = members[pos];
        int c = colour[pos] + 1;
        bool advanced = false;
        for (; c < lists.k; ++c) {
            if (!lists.allows(v, c)) continue;
            bool clash = false;
            for (size_t j = 0; j < pos; ++j)
                if (colour[j] == c && g.adjacent(v, members[j])) { clash = true; break; }
            if (!clash) { advanced = true; break; }
        }
        if (advanced) {
            colour[pos] = c;
            ++pos;
            if (pos < members.size()) colour[pos] = -1;
        } else {
            colour[pos] = -1;
            if (pos == 0) return std::nullopt;
            --pos;
        }
    }
}

} // namespace

ColouredSolution oracle_wmkcis(const WeightedGraph& g, const ListAssignment& lists, int cap) {
    lists.validate_against(g);
    if (g.n() > cap) throw InputError("oracle_wmkcis: instance exceeds oracle cap");
    if (g.n() > 30) throw InputError("oracle_wmkcis: subset scan supports at most 30 vertices");
    int n = g.n();
    ColouredSolution best = ColouredSolution::empty(n);

    uint32_t limit = uint32_t{1} << n;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        Weight w = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) w = checked_add(w, g.weight(v));
        if (w < best.total_weight) continue;
        VertexSet cand(n);
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) { cand.set(v); members.push_back(v); }
        if (w == best.total_weight && !VertexSet::lex_less(cand, best.vertices)) continue;
        auto colouring = colour_subset(g, lists, members);
        if (!colouring) continue;
        best = {cand, std::move(*colouring), w};
    }
    return best;
}

namespace {

struct MwisState {
    const WeightedGraph& g;
    VertexSet best;
    Weight best_w = 0;
};

void mwis_branch(MwisState& st, const VertexSet& chosen, Weight chosen_w, const VertexSet& cand) {
    Weight bound = checked_add(chosen_w, st.g.set_weight(cand));
    if (bound < st.best_w) return;
    if (cand.none()) {
        if (chosen_w > st.best_w ||
            (chosen_w == st.best_w && VertexSet::lex_less(chosen, st.best))) {
            st.best = chosen;
            st.best_w = chosen_w;
        }
        return;
    }
    int pick = -1, pick_deg = -1;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        int d = (st.g.neighbours(v) & cand).count();
        if (d > pick_deg) { pick_deg = d; pick = v; }
    }
    // include
    VertexSet with = chosen;
    with.set(pick);
    VertexSet rest = cand;
    rest.reset(pick);
    rest -= st.g.neighbours(pick);
    mwis_branch(st, with, checked_add(chosen_w, st.g.weight(pick)), rest);
    // exclude
    VertexSet without = cand;
    without.reset(pick);
    mwis_branch(st, chosen, chosen_w, without);
}

} // namespace

VertexSet mwis_branch_and_bound(const WeightedGraph& g) {
    MwisState st{g, VertexSet(g.n()), 0};
    mwis_branch(st, VertexSet(g.n()), 0, g.all_vertices());
    return st.best;
}

VertexSet oracle_mwis(const WeightedGraph& g, int cap) {
    if (g.n() > cap) throw InputError("oracle_mwis: instance exceeds oracle cap");
    return mwis_branch_and_bound(g);
}

std::optional<std::vector<int>> oracle_l_colourable(const WeightedGraph& g,
                                                    const ListAssignment& lists) {
    lists.validate_against(g);
    std::vector<int> members(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) members[static_cast<size_t>(v)] = v;
    return colour_subset(g, lists, members);
}

} // namespace wmkcis
