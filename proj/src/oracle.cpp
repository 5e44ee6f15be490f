#include "untangle/oracle.hpp"

#include <algorithm>
#include <string>

namespace untangle {

namespace {

struct Search {
    const TemporalGraph& g;
    const ResolvedBudget& rb;
    ObjectiveKind kind;
    int ell;

    std::vector<IntervalAssignment> chosen;
    std::vector<int> used;                  // per budget group
    std::vector<std::vector<int>> active;   // [v][t] covering-interval count
    long long spent = 0;                    // total length so far (SumLen)

    Search(const TemporalGraph& g, const ResolvedBudget& rb, ObjectiveKind kind,
           int ell)
        : g(g), rb(rb), kind(kind), ell(ell), used(rb.groups(), 0),
          active(g.n() + 1, std::vector<int>(g.tau() + 1, 0)) {}

    void take(const IntervalAssignment& iv) {
        chosen.push_back(iv);
        ++used[rb.group_of[iv.v]];
        spent += iv.length();
        for (TimeStep s = iv.a; s <= iv.b; ++s) ++active[iv.v][s];
    }

    void untake() {
        const IntervalAssignment iv = chosen.back();
        chosen.pop_back();
        --used[rb.group_of[iv.v]];
        spent -= iv.length();
        for (TimeStep s = iv.a; s <= iv.b; ++s) --active[iv.v][s];
    }

    // Every chosen interval stays chosen deeper in the search, so the first
    // uncovered time-edge only moves forward; (t0, e0) resumes the scan.
    bool dfs(TimeStep t0, std::size_t e0) {
        TimeStep t = t0;
        std::size_t ei = e0;
        for (; t <= g.tau(); ++t, ei = 0) {
            const auto& layer = g.layer(t);
            for (; ei < layer.size(); ++ei) {
                const Edge& e = layer[ei];
                if (!active[e.u][t] && !active[e.v][t]) return branch(t, ei, e);
            }
        }
        return true;  // every time-edge covered
    }

    bool branch(TimeStep t, std::size_t ei, const Edge& e) {
        for (Vertex w : {e.u, e.v}) {
            if (used[rb.group_of[w]] >= rb.limit[rb.group_of[w]]) continue;
            if (kind == ObjectiveKind::MaxLen) {
                const TimeStep lo = std::max(1, t - ell);
                const TimeStep hi = std::min(g.tau(), t + ell);
                for (TimeStep a = lo; a <= t; ++a)
                    for (TimeStep b = t; b <= std::min(hi, a + ell); ++b) {
                        take({w, a, b});
                        if (dfs(t, ei)) return true;
                        untake();
                    }
            } else {
                const long long rem = ell - spent;
                const int max_len = static_cast<int>(
                    std::min<long long>(rem, g.tau() - 1));
                for (int len = 0; len <= max_len; ++len)
                    for (TimeStep a = std::max(1, t - len);
                         a <= std::min(t, g.tau() - len); ++a) {
                        take({w, a, a + len});
                        if (dfs(t, ei)) return true;
                        untake();
                    }
            }
        }
        return false;
    }
};

}  // namespace

SolveOutcome oracle_solve(const TemporalGraph& g, const BudgetSpec& budget,
                          const Objective& objective, const OracleConfig& cfg) {
    if (objective.ell < 0) throw std::invalid_argument("objective bound must be nonnegative");
    const long long cells = static_cast<long long>(g.n()) * g.tau();
    if (cells > cfg.max_cells)
        throw SolverRefusal("oracle refuses n*tau = " + std::to_string(cells) +
                            " > cap " + std::to_string(cfg.max_cells));
    ResolvedBudget rb = resolve_budget(budget, g.n());
    Search s(g, rb, objective.kind, objective.ell);
    if (!s.dfs(1, 0)) return SolveOutcome::no();
    return SolveOutcome::yes_with(ActivityTimeline(std::move(s.chosen)));
}

std::optional<int> oracle_min_ell(const TemporalGraph& g, const BudgetSpec& budget,
                                  ObjectiveKind kind, const OracleConfig& cfg) {
    ResolvedBudget rb = resolve_budget(budget, g.n());
    int k_max = 0;
    for (int limit : rb.limit) k_max = std::max(k_max, limit);
    const long long scan_cap = static_cast<long long>(g.tau()) * g.n() * k_max;
    const long long ceiling =
        kind == ObjectiveKind::MaxLen
            ? g.tau() - 1
            : static_cast<long long>(g.n()) * k_max * (g.tau() - 1);
    const long long last = std::min(scan_cap, ceiling);
    for (long long ell = 0; ell <= last; ++ell)
        if (oracle_solve(g, budget, {kind, static_cast<int>(ell)}, cfg).yes)
            return static_cast<int>(ell);
    return std::nullopt;
}

}  // namespace untangle
