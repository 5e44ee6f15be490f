#include "untangle/branch.hpp"

#include <algorithm>

namespace untangle {

namespace {

struct Brancher {
    int n, tau, k, ell;
    std::vector<std::vector<Edge>> layers;        // sorted copies
    std::vector<std::vector<char>> alive;
    std::vector<int> alive_count;
    std::vector<int> used;                        // per-vertex interval count
    std::vector<IntervalAssignment> path;
    std::vector<std::pair<int, int>> undo;        // (layer index, edge index)
    BranchStats stats;

    Brancher(const TemporalGraph& g, int k, int ell)
        : n(g.n()), tau(g.tau()), k(k), ell(ell), layers(g.layers()),
          alive(tau), alive_count(tau), used(n + 1, 0) {
        for (int t = 0; t < tau; ++t) {
            alive[t].assign(layers[t].size(), 1);
            alive_count[t] = static_cast<int>(layers[t].size());
        }
    }

    // Removes the alive edges incident to w in layers a..b (1-based),
    // recording them for restore().
    std::size_t cover(Vertex w, TimeStep a, TimeStep b) {
        std::size_t mark = undo.size();
        for (int t = a - 1; t < b; ++t)
            for (std::size_t i = 0; i < layers[t].size(); ++i)
                if (alive[t][i] && (layers[t][i].u == w || layers[t][i].v == w)) {
                    alive[t][i] = 0;
                    --alive_count[t];
                    undo.emplace_back(t, static_cast<int>(i));
                }
        return mark;
    }

    void restore(std::size_t mark) {
        while (undo.size() > mark) {
            auto [t, i] = undo.back();
            undo.pop_back();
            alive[t][i] = 1;
            ++alive_count[t];
        }
    }

    // `from` is 1-based; edges are only ever deleted at or after the layer
    // being branched on, so the earliest nonempty layer never moves back.
    bool dfs(TimeStep from) {
        ++stats.nodes;
        int t = from;
        while (t <= tau && alive_count[t - 1] == 0) ++t;
        if (t > tau) {
            ++stats.leaves;
            return true;
        }
        const auto& layer = layers[t - 1];
        std::size_t ei = 0;
        while (!alive[t - 1][ei]) ++ei;  // first alive edge is lex smallest
        const Edge e = layer[ei];
        bool branched = false;
        for (Vertex w : {e.u, e.v}) {
            if (used[w] >= k) continue;
            branched = true;
            const TimeStep end = std::min(t + ell, tau);
            ++used[w];
            path.push_back({w, t, end});
            std::size_t mark = cover(w, t, end);
            if (dfs(t)) return true;
            restore(mark);
            path.pop_back();
            --used[w];
        }
        if (!branched) ++stats.leaves;  // both endpoints out of budget
        return false;
    }
};

}  // namespace

SolveOutcome solve_max_branching(const TemporalGraph& g, int k, int ell,
                                 BranchStats* stats) {
    if (k < 0 || ell < 0)
        throw std::invalid_argument("budget and bound must be nonnegative");
    Brancher b(g, k, ell);
    bool yes = b.dfs(1);
    if (stats) *stats = b.stats;
    if (!yes) return SolveOutcome::no();
    return SolveOutcome::yes_with(ActivityTimeline(std::move(b.path)));
}

}  // namespace untangle
