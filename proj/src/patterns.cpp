#include "untangle/patterns.hpp"

#include <algorithm>
#include <cstdint>

#include "untangle/layerzero.hpp"

namespace untangle {

namespace {

// Chosen intervals arrive sorted by (a, b, v); consecutive intervals overlap
// into one window exactly when the next starts no later than the running
// maximum end.
PatternSequence group_into_patterns(const std::vector<IntervalAssignment>& chosen) {
    PatternSequence seq;
    for (const auto& iv : chosen) {
        if (seq.empty() || iv.a > seq.back().end) {
            seq.push_back({iv.a, iv.b, {iv}});
        } else {
            seq.back().end = std::max(seq.back().end, iv.b);
            seq.back().intervals.push_back(iv);
        }
    }
    for (auto& p : seq) {
        for (auto& iv : p.intervals) {
            iv.a -= p.start;
            iv.b -= p.start;
        }
        std::sort(p.intervals.begin(), p.intervals.end());
    }
    return seq;
}

struct Enumerator {
    const std::function<bool(const PatternSequence&)>& visit;
    std::vector<IntervalAssignment> universe;  // sorted by (a, b, v)
    std::vector<IntervalAssignment> chosen;
    std::vector<int> used;
    int k, rem;
    bool stopped = false;

    Enumerator(const TemporalGraph& g, int k, int ell,
               const std::function<bool(const PatternSequence&)>& visit)
        : visit(visit), used(g.n() + 1, 0), k(k), rem(ell) {
        for (TimeStep a = 1; a < g.tau(); ++a)
            for (TimeStep b = a + 1; b <= std::min(g.tau(), a + ell); ++b)
                for (Vertex v = 1; v <= g.n(); ++v)
                    universe.push_back({v, a, b});
    }

    void dfs(std::size_t from) {
        if (!visit(group_into_patterns(chosen))) {
            stopped = true;
            return;
        }
        for (std::size_t i = from; i < universe.size() && !stopped; ++i) {
            const auto& iv = universe[i];
            if (iv.length() > rem || used[iv.v] >= k) continue;
            chosen.push_back(iv);
            used[iv.v]++;
            rem -= iv.length();
            dfs(i + 1);
            rem += iv.length();
            used[iv.v]--;
            chosen.pop_back();
        }
    }
};

// Minimum cover size of each layer after deleting edges incident to an
// active-vertex mask, memoized over all masks per layer.
struct ResidualCoverSizes {
    std::vector<std::vector<int>> memo;  // [t-1][mask], -1 unknown
    const TemporalGraph& g;

    explicit ResidualCoverSizes(const TemporalGraph& g)
        : memo(g.tau(), std::vector<int>(std::size_t(1) << g.n(), -1)), g(g) {}

    int size(TimeStep t, std::uint32_t mask) {
        int& slot = memo[t - 1][mask];
        if (slot >= 0) return slot;
        for (const Edge& e : g.layer(t)) {
            if (((mask >> (e.u - 1)) & 1) || ((mask >> (e.v - 1)) & 1)) continue;
            return slot = 1 + std::min(size(t, mask | (1u << (e.u - 1))),
                                       size(t, mask | (1u << (e.v - 1))));
        }
        return slot = 0;
    }
};

}  // namespace

void enumerate_pattern_sequences(const TemporalGraph& g, int k, int ell,
                                 const std::function<bool(const PatternSequence&)>& visit) {
    if (ell < 1) throw std::invalid_argument("enumeration needs ell >= 1");
    if (k < 0) throw std::invalid_argument("budget must be nonnegative");
    Enumerator e(g, k, ell, visit);
    e.dfs(0);
}

std::pair<TemporalGraph, std::vector<int>> apply_patterns(
    const TemporalGraph& g, const std::vector<int>& budgets,
    const PatternSequence& seq) {
    if (static_cast<int>(budgets.size()) != g.n())
        throw std::invalid_argument("one budget entry per vertex required");
    std::vector<std::vector<char>> active(g.n() + 1,
                                          std::vector<char>(g.tau() + 1, 0));
    std::vector<int> residual = budgets;
    for (const auto& p : seq) {
        if (p.start < 1 || p.end > g.tau() || p.start > p.end)
            throw std::invalid_argument("pattern window outside the lifetime");
        for (const auto& iv : p.intervals) {
            if (iv.v < 1 || iv.v > g.n() || iv.a < 0 || iv.a >= iv.b ||
                p.start + iv.b > p.end)
                throw std::invalid_argument("pattern interval outside its window");
            if (--residual[iv.v - 1] < 0)
                throw std::invalid_argument("pattern exceeds vertex budget");
            for (TimeStep t = p.start + iv.a; t <= p.start + iv.b; ++t)
                active[iv.v][t] = 1;
        }
    }
    std::vector<std::vector<Edge>> layers(g.tau());
    for (TimeStep t = 1; t <= g.tau(); ++t)
        for (const Edge& e : g.layer(t))
            if (!active[e.u][t] && !active[e.v][t]) layers[t - 1].push_back(e);
    return {TemporalGraph(g.n(), g.tau(), std::move(layers)), std::move(residual)};
}

SolveOutcome solve_sum_patterns(const TemporalGraph& g, int k, int ell) {
    if (k < 0 || ell < 0)
        throw std::invalid_argument("budget and bound must be nonnegative");
    if (ell == 0) return solve_zero(g, UniformBudget{k});
    if (g.n() > 20)
        throw SolverRefusal("pattern enumeration over " + std::to_string(g.n()) +
                            " vertices refused");

    ResidualCoverSizes mincover(g);
    const std::vector<int> full(g.n(), k);
    SolveOutcome result = SolveOutcome::no();
    enumerate_pattern_sequences(g, k, ell, [&](const PatternSequence& seq) {
        auto [residual, budgets] = apply_patterns(g, full, seq);
        // a zero-length completion spends one activation per cover member,
        // so the residual cover sizes must fit into the residual budgets
        long long need = 0;
        std::vector<std::uint32_t> masks(g.tau() + 1, 0);
        for (const auto& p : seq)
            for (const auto& iv : p.intervals)
                for (TimeStep t = p.start + iv.a; t <= p.start + iv.b; ++t)
                    masks[t] |= 1u << (iv.v - 1);
        for (TimeStep t = 1; t <= g.tau(); ++t) need += mincover.size(t, masks[t]);
        long long avail = 0;
        for (int b : budgets) avail += b;
        if (need > avail) return true;  // keep searching

        NonUniformBudget rest;
        for (Vertex v = 1; v <= g.n(); ++v)
            rest.entries.emplace_back(v, budgets[v - 1]);
        SolveOutcome zero = solve_zero(residual, rest);
        if (!zero.yes) return true;

        std::vector<IntervalAssignment> entries = zero.witness->entries();
        for (const auto& p : seq)
            for (const auto& iv : p.intervals)
                entries.push_back({iv.v, p.start + iv.a, p.start + iv.b});
        result = SolveOutcome::yes_with(ActivityTimeline(std::move(entries)));
        return false;  // first hit wins
    });
    return result;
}

}  // namespace untangle
