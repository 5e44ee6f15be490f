#include "untangle/layerzero.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace untangle {

namespace {

using Mask = std::uint32_t;

bool covers(Mask mask, const std::vector<Edge>& edges) {
    for (const Edge& e : edges)
        if (!((mask >> (e.u - 1)) & 1) && !((mask >> (e.v - 1)) & 1)) return false;
    return true;
}

// Minimal vertex covers of `edges`, ordered by cardinality then mask value.
// A cover is minimal iff every member privately covers some edge.
std::vector<Mask> minimal_covers(const std::vector<Edge>& edges, int n) {
    std::vector<Mask> out;
    for (Mask mask = 0; mask < (Mask(1) << n); ++mask) {
        if (!covers(mask, edges)) continue;
        bool minimal = true;
        for (int j = 0; j < n && minimal; ++j)
            if ((mask >> j) & 1) {
                bool needed = false;
                for (const Edge& e : edges) {
                    if (e.u != j + 1 && e.v != j + 1) continue;
                    const int other = (e.u == j + 1 ? e.v : e.u) - 1;
                    if (!((mask >> other) & 1)) {
                        needed = true;
                        break;
                    }
                }
                if (!needed) minimal = false;
            }
        if (minimal) out.push_back(mask);
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

struct ZeroSearch {
    const LayerProfile& profile;
    const ResolvedBudget& rb;
    int n;
    std::vector<int> order;                         // positions -> distinct index
    std::vector<std::vector<Mask>> covers;          // per position
    std::vector<std::vector<std::vector<int>>> suffix_min;  // [pos][ci][group]
    std::vector<std::vector<long long>> tail;       // [pos][group]
    std::vector<Mask> group_mask;
    std::vector<long long> used;
    std::vector<std::vector<std::pair<Mask, int>>> chosen;  // per position

    ZeroSearch(const LayerProfile& profile, const ResolvedBudget& rb, int n)
        : profile(profile), rb(rb), n(n) {
        const int d_count = static_cast<int>(profile.distinct.size());
        order.resize(d_count);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const int ma = profile.multiplicity(a), mb = profile.multiplicity(b);
            if (ma != mb) return ma > mb;
            return profile.occurrences[a][0] < profile.occurrences[b][0];
        });

        group_mask.assign(rb.groups(), 0);
        for (Vertex v = 1; v <= n; ++v)
            group_mask[rb.group_of[v]] |= Mask(1) << (v - 1);

        covers.resize(d_count);
        suffix_min.resize(d_count);
        for (int pos = 0; pos < d_count; ++pos) {
            covers[pos] = minimal_covers(profile.distinct[order[pos]], n);
            const int cc = static_cast<int>(covers[pos].size());
            suffix_min[pos].assign(cc + 1, std::vector<int>(rb.groups(), n + 1));
            for (int ci = cc - 1; ci >= 0; --ci)
                for (int gr = 0; gr < rb.groups(); ++gr)
                    suffix_min[pos][ci][gr] =
                        std::min(suffix_min[pos][ci + 1][gr],
                                 std::popcount(covers[pos][ci] & group_mask[gr]));
        }

        tail.assign(d_count + 1, std::vector<long long>(rb.groups(), 0));
        for (int pos = d_count - 1; pos >= 0; --pos)
            for (int gr = 0; gr < rb.groups(); ++gr)
                tail[pos][gr] =
                    tail[pos + 1][gr] +
                    static_cast<long long>(profile.multiplicity(order[pos])) *
                        suffix_min[pos][0][gr];

        used.assign(rb.groups(), 0);
        chosen.resize(d_count);
    }

    bool dfs(int pos, int ci, int rem) {
        if (pos == static_cast<int>(order.size())) return true;
        if (rem == 0) {
            const int next = pos + 1;
            return dfs(next, 0,
                       next == static_cast<int>(order.size())
                           ? 0
                           : profile.multiplicity(order[next]));
        }
        if (ci == static_cast<int>(covers[pos].size())) return false;
        // forced demand: every remaining occurrence needs at least the
        // cheapest remaining cover from each group's point of view
        for (int gr = 0; gr < rb.groups(); ++gr) {
            const long long forced =
                static_cast<long long>(rem) * suffix_min[pos][ci][gr] +
                tail[pos + 1][gr];
            if (used[gr] + forced > rb.limit[gr]) return false;
        }
        const Mask cover = covers[pos][ci];
        int hi = rem;
        for (int gr = 0; gr < rb.groups(); ++gr) {
            const int c = std::popcount(cover & group_mask[gr]);
            if (c > 0)
                hi = std::min(hi, static_cast<int>((rb.limit[gr] - used[gr]) / c));
        }
        for (int x = hi; x >= 0; --x) {
            for (int gr = 0; gr < rb.groups(); ++gr)
                used[gr] += static_cast<long long>(x) *
                            std::popcount(cover & group_mask[gr]);
            if (x > 0) chosen[pos].push_back({cover, x});
            if (dfs(pos, ci + 1, rem - x)) return true;
            if (x > 0) chosen[pos].pop_back();
            for (int gr = 0; gr < rb.groups(); ++gr)
                used[gr] -= static_cast<long long>(x) *
                            std::popcount(cover & group_mask[gr]);
        }
        return false;
    }

    CoverAssignment assignment() const {
        CoverAssignment a;
        a.uses.resize(order.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos)
            a.uses[order[pos]] = chosen[pos];
        return a;
    }
};

}  // namespace

LayerProfile build_layer_profile(const TemporalGraph& g) {
    LayerProfile p;
    std::map<std::vector<Edge>, int> index;
    for (TimeStep t = 1; t <= g.tau(); ++t) {
        auto [it, fresh] = index.try_emplace(g.layer(t),
                                             static_cast<int>(p.distinct.size()));
        if (fresh) {
            p.distinct.push_back(g.layer(t));
            p.occurrences.emplace_back();
        }
        p.occurrences[it->second].push_back(t);
    }
    return p;
}

ActivityTimeline expand_cover_assignment(const LayerProfile& profile,
                                         const CoverAssignment& assignment) {
    if (assignment.uses.size() != profile.distinct.size())
        throw std::invalid_argument("assignment does not match profile");
    std::vector<IntervalAssignment> entries;
    for (std::size_t d = 0; d < profile.distinct.size(); ++d) {
        std::size_t at = 0;
        for (const auto& [cover, count] : assignment.uses[d])
            for (int c = 0; c < count; ++c) {
                if (at >= profile.occurrences[d].size())
                    throw std::invalid_argument("assignment exceeds multiplicity");
                const TimeStep t = profile.occurrences[d][at++];
                for (int j = 0; cover >> j; ++j)
                    if ((cover >> j) & 1) entries.push_back({j + 1, t, t});
            }
        if (at != profile.occurrences[d].size())
            throw std::invalid_argument("assignment does not cover every occurrence");
    }
    return ActivityTimeline(std::move(entries));
}

SolveOutcome solve_zero(const TemporalGraph& g, const BudgetSpec& budget) {
    const int n = g.n();
    if (n > 25)
        throw SolverRefusal("cover enumeration over " + std::to_string(n) +
                            " vertices refused");
    ResolvedBudget rb = resolve_budget(budget, n);
    LayerProfile profile = build_layer_profile(g);
    ZeroSearch search(profile, rb, n);
    const int first_rem =
        profile.distinct.empty() ? 0 : profile.multiplicity(search.order[0]);
    if (!search.dfs(0, 0, first_rem)) return SolveOutcome::no();
    return SolveOutcome::yes_with(
        expand_cover_assignment(profile, search.assignment()));
}

std::vector<std::vector<int>> timeline_to_coloring(const ActivityTimeline& t, int n,
                                                   int tau, int k) {
    if (k < 0 || k > tau) throw std::invalid_argument("need 0 <= k <= tau");
    std::vector<std::vector<char>> active(n + 1, std::vector<char>(tau + 1, 0));
    std::vector<int> count(n + 1, 0);
    for (const auto& iv : t.entries()) {
        if (iv.v < 1 || iv.v > n)
            throw std::invalid_argument("vertex outside 1.." + std::to_string(n));
        if (iv.a != iv.b) throw std::invalid_argument("interval has positive length");
        if (iv.a < 1 || iv.a > tau)
            throw std::invalid_argument("activation outside 1.." + std::to_string(tau));
        active[iv.v][iv.a] = 1;
        if (++count[iv.v] > k)
            throw std::invalid_argument("vertex " + std::to_string(iv.v) +
                                        " has more than " + std::to_string(k) +
                                        " activations");
    }
    std::vector<std::vector<int>> colors(n);
    for (Vertex v = 1; v <= n; ++v) {
        for (TimeStep s = 1; s <= tau && count[v] < k; ++s)
            if (!active[v][s]) {
                active[v][s] = 1;  // pad to exactly k activations
                ++count[v];
            }
        for (TimeStep s = 1; s <= tau; ++s)
            if (!active[v][s]) colors[v - 1].push_back(s);
    }
    return colors;
}

ActivityTimeline coloring_to_timeline(const std::vector<std::vector<int>>& c, int tau,
                                      int k) {
    if (k < 0 || k > tau) throw std::invalid_argument("need 0 <= k <= tau");
    std::vector<IntervalAssignment> entries;
    for (std::size_t v = 0; v < c.size(); ++v) {
        std::vector<char> has(tau + 1, 0);
        for (int col : c[v]) {
            if (col < 1 || col > tau)
                throw std::invalid_argument("color outside 1.." + std::to_string(tau));
            if (has[col]) throw std::invalid_argument("repeated color");
            has[col] = 1;
        }
        if (static_cast<int>(c[v].size()) != tau - k)
            throw std::invalid_argument("every vertex needs exactly " +
                                        std::to_string(tau - k) + " colors");
        for (TimeStep s = 1; s <= tau; ++s)
            if (!has[s]) entries.push_back({static_cast<Vertex>(v + 1), s, s});
    }
    return ActivityTimeline(std::move(entries));
}

ColoringOutcome solve_ab_coloring(const StaticGraph& g, int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("need 1 <= b <= a");
    StaticGraph norm = normalize_static(g);
    std::vector<std::vector<Edge>> layers(a, norm.edges);
    TemporalGraph tg(norm.n, a, std::move(layers));
    SolveOutcome res = solve_zero(tg, UniformBudget{a - b});
    if (!res.yes) return {};
    return {true, timeline_to_coloring(*res.witness, norm.n, a, a - b)};
}

}  // namespace untangle
