#include "untangle/reductions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

namespace untangle {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::vector<Vertex>> adjacency(const StaticGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.n + 1);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

}  // namespace

// ---- odd cycle transversal ----

ProblemInstance reduce_oct_to_sum(const StaticGraph& g, int s) {
    require(s >= 0, "deletion budget must be nonnegative");
    StaticGraph norm = normalize_static(g);
    std::vector<std::vector<Edge>> layers{norm.edges, norm.edges};
    return {TemporalGraph(norm.n, 2, std::move(layers)), UniformBudget{1},
            {ObjectiveKind::SumLen, s}};
}

std::optional<std::vector<int>> two_color(const StaticGraph& g) {
    StaticGraph norm = normalize_static(g);
    auto adj = adjacency(norm);
    std::vector<int> color(norm.n + 1, -1);
    std::vector<Vertex> queue;
    for (Vertex s = 1; s <= norm.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            for (Vertex w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<int>(color.begin() + 1, color.end());
}

ActivityTimeline oct_witness_to_timeline(const StaticGraph& g,
                                         const std::vector<Vertex>& transversal) {
    StaticGraph norm = normalize_static(g);
    std::vector<char> removed(norm.n + 1, 0);
    for (Vertex v : transversal) {
        require(v >= 1 && v <= norm.n, "transversal vertex out of range");
        removed[v] = 1;
    }
    StaticGraph rest{norm.n, {}};
    for (const Edge& e : norm.edges)
        if (!removed[e.u] && !removed[e.v]) rest.edges.push_back(e);
    auto coloring = two_color(rest);
    require(coloring.has_value(), "graph minus transversal is not bipartite");
    std::vector<IntervalAssignment> entries;
    for (Vertex v = 1; v <= norm.n; ++v) {
        if (removed[v])
            entries.push_back({v, 1, 2});
        else if ((*coloring)[v - 1] == 0)
            entries.push_back({v, 1, 1});
        else
            entries.push_back({v, 2, 2});
    }
    return ActivityTimeline(std::move(entries));
}

std::vector<Vertex> timeline_to_oct_witness(const ActivityTimeline& t) {
    std::vector<Vertex> out;
    for (const auto& iv : t.entries())
        if (iv.a <= 1 && iv.b >= 2) out.push_back(iv.v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::vector<Vertex>> oct_brute_force(const StaticGraph& g, int s) {
    StaticGraph norm = normalize_static(g);
    if (norm.n > 20)
        throw SolverRefusal("subset search over more than 20 vertices refused");
    const std::uint32_t full = (1u << norm.n) - 1;
    for (int size = 0; size <= std::min(s, norm.n); ++size)
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != size) continue;
            StaticGraph rest{norm.n, {}};
            for (const Edge& e : norm.edges)
                if (!((mask >> (e.u - 1)) & 1) && !((mask >> (e.v - 1)) & 1))
                    rest.edges.push_back(e);
            if (two_color(rest)) {
                std::vector<Vertex> out;
                for (int j = 0; j < norm.n; ++j)
                    if ((mask >> j) & 1) out.push_back(j + 1);
                return out;
            }
        }
    return std::nullopt;
}

// ---- clause deletion ----

TwoCnfInstance reduce_sum_tau2_to_almost2sat(const TemporalGraph& g, int ell) {
    require(g.tau() == 2, "reduction needs exactly two layers");
    require(ell >= 0, "deletion budget must be nonnegative");
    TwoCnfInstance f;
    f.n_vertices = g.n();
    f.budget = ell;
    for (int i = 1; i <= 2; ++i)
        for (const Edge& e : g.layer(i))
            for (int copy = 0; copy <= ell; ++copy)
                f.clauses.push_back({{e.u, i, false}, {e.v, i, false}});
    for (Vertex v = 1; v <= g.n(); ++v)
        f.clauses.push_back({{v, 1, true}, {v, 2, true}});
    return f;
}

ActivityTimeline two_cnf_solution_to_timeline(const TemporalGraph& g,
                                              const TwoCnfSolution& sol) {
    require(g.tau() == 2, "timeline lives on two layers");
    require(sol.values.size() == static_cast<std::size_t>(2 * g.n()),
            "one value per variable required");
    std::vector<IntervalAssignment> entries;
    for (Vertex v = 1; v <= g.n(); ++v) {
        const bool first = sol.values[2 * (v - 1)];
        const bool second = sol.values[2 * (v - 1) + 1];
        if (first && second)
            entries.push_back({v, 1, 2});
        else if (first)
            entries.push_back({v, 1, 1});
        else if (second)
            entries.push_back({v, 2, 2});
    }
    return ActivityTimeline(std::move(entries));
}

std::optional<TwoCnfSolution> two_cnf_brute_force(const TwoCnfInstance& f,
                                                  const TwoCnfCaps& caps) {
    if (f.budget > caps.max_budget)
        throw SolverRefusal("deletion budget " + std::to_string(f.budget) +
                            " above brute-force cap " +
                            std::to_string(caps.max_budget));
    if (2 * f.n_vertices > caps.max_vars)
        throw SolverRefusal("variable count " + std::to_string(2 * f.n_vertices) +
                            " above brute-force cap " + std::to_string(caps.max_vars));

    // identical clauses form a group; a group's constraint only disappears
    // when all copies go, so deletions are chosen per whole group
    std::map<TwoCnfClause, std::vector<int>> groups;
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        groups[f.clauses[i]].push_back(static_cast<int>(i));
    std::vector<const std::vector<int>*> group_list;
    for (const auto& [clause, indices] : groups) group_list.push_back(&indices);

    const std::size_t assignments = std::size_t(1) << (2 * f.n_vertices);
    auto lit_value = [&](const TwoCnfLiteral& l, std::size_t bits) {
        const bool val = (bits >> (2 * (l.v - 1) + (l.idx - 1))) & 1;
        return l.negated ? !val : val;
    };

    std::vector<int> deleted_groups;
    std::optional<TwoCnfSolution> found;

    auto try_assignments = [&]() {
        std::vector<char> dead(group_list.size(), 0);
        for (int gi : deleted_groups) dead[gi] = 1;
        for (std::size_t bits = 0; bits < assignments; ++bits) {
            bool sat = true;
            std::size_t gi = 0;
            for (const auto& [clause, indices] : groups) {
                if (!dead[gi++] &&
                    !lit_value(clause.first, bits) && !lit_value(clause.second, bits)) {
                    sat = false;
                    break;
                }
            }
            if (!sat) continue;
            TwoCnfSolution sol;
            for (int gi2 : deleted_groups)
                for (int idx : *group_list[gi2]) sol.deleted.push_back(idx);
            std::sort(sol.deleted.begin(), sol.deleted.end());
            sol.values.resize(2 * f.n_vertices);
            for (int b = 0; b < 2 * f.n_vertices; ++b)
                sol.values[b] = (bits >> b) & 1;
            found = std::move(sol);
            return true;
        }
        return false;
    };

    // deletion sets in order of total copies spent, smallest first
    std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
        if (try_assignments()) return true;
        for (std::size_t gi = from; gi < group_list.size(); ++gi) {
            const int cost = static_cast<int>(group_list[gi]->size());
            if (cost > left) continue;
            deleted_groups.push_back(static_cast<int>(gi));
            if (pick(gi + 1, left - cost)) return true;
            deleted_groups.pop_back();
        }
        return false;
    };
    pick(0, f.budget);
    return found;
}

// ---- unary bin packing ----

BinPackingInstance normalize_bin_packing(BinPackingInstance bp,
                                         const BinPackingCaps& caps) {
    require(bp.beta >= 1, "bin count must be positive");
    require(bp.bin_size >= 1, "bin size must be positive");
    long long total = 0;
    for (int s : bp.sizes) {
        require(s >= 1, "item sizes must be positive");
        total += s;
    }
    const long long target = static_cast<long long>(bp.beta) * bp.bin_size;
    require(total <= target, "items exceed total bin capacity");
    require(target <= caps.max_total, "instance above unary-scale cap");
    while (total < target) {
        bp.sizes.push_back(1);  // unit padding keeps the answer unchanged
        ++total;
    }
    return bp;
}

std::vector<std::pair<TimeStep, TimeStep>> bin_packing_item_ranges(
    const BinPackingInstance& bp) {
    std::vector<std::pair<TimeStep, TimeStep>> ranges;
    TimeStep next = 1;
    for (int s : bp.sizes) {
        ranges.emplace_back(next, next + 2 * s - 1);
        next += 2 * s;
    }
    return ranges;
}

ProblemInstance reduce_binpacking_to_multicolored(const BinPackingInstance& bp) {
    long long total = 0;
    for (int s : bp.sizes) {
        require(s >= 1, "item sizes must be positive");
        total += s;
    }
    require(bp.beta >= 1, "bin count must be positive");
    require(total == static_cast<long long>(bp.beta) * bp.bin_size,
            "sizes must sum to beta * B; normalize first");
    const int beta = bp.beta;
    const int S = static_cast<int>(total);
    const int m = static_cast<int>(bp.sizes.size());
    const int n = 2 * beta;
    const int tau = 2 * S;

    std::vector<Edge> clique;
    for (int j = 1; j <= beta; ++j)
        for (int j2 = j + 1; j2 <= beta; ++j2) clique.push_back({j, j2});
    std::vector<Edge> with_pendants = clique;
    for (int j = 1; j <= beta; ++j) with_pendants.push_back({j, beta + j});

    std::vector<std::vector<Edge>> layers(tau);
    for (auto [first, last] : bin_packing_item_ranges(bp))
        for (TimeStep t = first; t <= last; ++t)
            layers[t - 1] = (t == first || t == last) ? clique : with_pendants;

    MulticoloredBudget budget;
    for (int j = 1; j <= beta; ++j) {
        budget.classes.push_back({j});
        budget.budgets.push_back(S - bp.bin_size);
    }
    std::vector<Vertex> selectors;
    for (int j = 1; j <= beta; ++j) selectors.push_back(beta + j);
    budget.classes.push_back(selectors);
    budget.budgets.push_back(S - m);

    return {TemporalGraph(n, tau, std::move(layers)), budget,
            {ObjectiveKind::MaxLen, 1}};
}

ActivityTimeline packing_to_timeline(const BinPackingInstance& bp,
                                     const std::vector<int>& assignment) {
    require(assignment.size() == bp.sizes.size(), "one bin per item required");
    std::vector<long long> load(bp.beta + 1, 0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        require(assignment[i] >= 1 && assignment[i] <= bp.beta, "bin out of range");
        load[assignment[i]] += bp.sizes[i];
    }
    for (int j = 1; j <= bp.beta; ++j)
        require(load[j] == bp.bin_size, "assignment is not a perfect packing");

    auto ranges = bin_packing_item_ranges(bp);
    std::vector<IntervalAssignment> entries;
    for (std::size_t i = 0; i < bp.sizes.size(); ++i) {
        const auto [first, last] = ranges[i];
        const int bin = assignment[i];
        for (int a = 0; a < bp.sizes[i]; ++a)
            for (int j = 1; j <= bp.beta; ++j)
                if (j != bin)
                    entries.push_back({j, first + 2 * a, first + 2 * a + 1});
        for (int a = 0; a + 2 <= bp.sizes[i]; ++a)
            entries.push_back({bp.beta + bin, first + 2 * a + 1, first + 2 * a + 2});
    }
    return ActivityTimeline(std::move(entries));
}

std::vector<int> timeline_to_packing(const BinPackingInstance& bp,
                                     const ActivityTimeline& t) {
    auto ranges = bin_packing_item_ranges(bp);
    std::vector<int> assignment;
    for (std::size_t i = 0; i < bp.sizes.size(); ++i) {
        const auto [first, last] = ranges[i];
        // the item's bin is the one u_j never activated inside its layers
        std::vector<char> seen(bp.beta + 1, 0);
        for (const auto& iv : t.entries()) {
            if (iv.v < 1 || iv.v > bp.beta) continue;
            for (TimeStep s = std::max(iv.a, first); s <= std::min(iv.b, last); ++s)
                seen[iv.v] = 1;
        }
        int bin = 0;
        for (int j = 1; j <= bp.beta; ++j)
            if (!seen[j]) {
                require(bin == 0, "two candidate bins for one item");
                bin = j;
            }
        require(bin != 0, "no candidate bin for an item");
        assignment.push_back(bin);
    }
    return assignment;
}

std::optional<std::vector<int>> bin_packing_brute_force(const BinPackingInstance& bp) {
    std::vector<long long> load(bp.beta + 1, 0);
    std::vector<int> assignment(bp.sizes.size(), 0);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == bp.sizes.size()) {
            for (int j = 1; j <= bp.beta; ++j)
                if (load[j] != bp.bin_size) return false;
            return true;
        }
        for (int j = 1; j <= bp.beta; ++j) {
            if (load[j] + bp.sizes[i] > bp.bin_size) continue;
            load[j] += bp.sizes[i];
            assignment[i] = j;
            if (place(i + 1)) return true;
            load[j] -= bp.sizes[i];
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return assignment;
}

// ---- multicolored -> per-vertex budgets ----

namespace {

const MulticoloredBudget& multicolored_of(const ProblemInstance& src) {
    const auto* mc = std::get_if<MulticoloredBudget>(&src.budget);
    require(mc != nullptr, "source instance must carry class budgets");
    require(src.objective.kind == ObjectiveKind::MaxLen && src.objective.ell == 1,
            "reduction is for MaxLen with ell = 1");
    return *mc;
}

// Appended clique blocks: class i occupies 2*k_i layers starting at
// tau + 1 + 2 * (k_1 + ... + k_{i-1}).
std::vector<TimeStep> class_block_starts(const TemporalGraph& g,
                                         const MulticoloredBudget& mc) {
    std::vector<TimeStep> starts;
    TimeStep next = g.tau() + 1;
    for (int k : mc.budgets) {
        starts.push_back(next);
        next += 2 * k;
    }
    return starts;
}

}  // namespace

ProblemInstance reduce_multicolored_to_nonuniform(const ProblemInstance& src) {
    const MulticoloredBudget& mc = multicolored_of(src);
    resolve_budget(src.budget, src.graph.n());  // validates the partition
    int extra = 0;
    for (int k : mc.budgets) {
        require(k >= 0, "budgets must be nonnegative");
        extra += 2 * k;
    }
    std::vector<std::vector<Edge>> layers = src.graph.layers();
    layers.reserve(src.graph.tau() + extra);
    for (std::size_t i = 0; i < mc.classes.size(); ++i) {
        std::vector<Edge> clique;
        for (std::size_t a = 0; a < mc.classes[i].size(); ++a)
            for (std::size_t b = a + 1; b < mc.classes[i].size(); ++b) {
                Vertex u = mc.classes[i][a], v = mc.classes[i][b];
                clique.push_back({std::min(u, v), std::max(u, v)});
            }
        for (int c = 0; c < 2 * mc.budgets[i]; ++c) layers.push_back(clique);
    }
    NonUniformBudget nb;
    for (std::size_t i = 0; i < mc.classes.size(); ++i)
        for (Vertex v : mc.classes[i]) nb.entries.emplace_back(v, mc.budgets[i]);
    std::sort(nb.entries.begin(), nb.entries.end());
    return {TemporalGraph(src.graph.n(), src.graph.tau() + extra, std::move(layers)),
            nb, src.objective};
}

ActivityTimeline multicolored_witness_to_nonuniform(const ProblemInstance& src,
                                                    const ActivityTimeline& t) {
    const MulticoloredBudget& mc = multicolored_of(src);
    auto starts = class_block_starts(src.graph, mc);
    std::vector<int> usage(src.graph.n() + 1, 0);
    for (const auto& iv : t.entries()) ++usage[iv.v];
    std::vector<IntervalAssignment> entries = t.entries();
    for (std::size_t i = 0; i < mc.classes.size(); ++i) {
        // slot a of the block is served by one member sitting out; members
        // sit out at least as often as they are used in the original part
        std::vector<Vertex> sit_out;
        for (Vertex v : mc.classes[i])
            for (int c = 0; c < usage[v]; ++c) sit_out.push_back(v);
        require(static_cast<int>(sit_out.size()) <= mc.budgets[i],
                "witness exceeds a class budget");
        while (static_cast<int>(sit_out.size()) < mc.budgets[i])
            sit_out.push_back(mc.classes[i].front());
        for (int a = 0; a < mc.budgets[i]; ++a) {
            const TimeStep at = starts[i] + 2 * a;
            for (Vertex v : mc.classes[i])
                if (v != sit_out[a]) entries.push_back({v, at, at + 1});
        }
    }
    return ActivityTimeline(std::move(entries));
}

ActivityTimeline nonuniform_witness_to_multicolored(const ProblemInstance& src,
                                                    const ActivityTimeline& t) {
    multicolored_of(src);
    std::vector<IntervalAssignment> entries;
    for (const auto& iv : t.entries())
        if (iv.a <= src.graph.tau())
            entries.push_back({iv.v, iv.a, std::min(iv.b, src.graph.tau())});
    return ActivityTimeline(std::move(entries));
}

// ---- per-vertex budgets -> uniform budget ----

namespace {

struct NonUniformView {
    std::vector<int> k_of;  // 1-based
    int k_max = 0;
};

NonUniformView nonuniform_of(const ProblemInstance& src) {
    const auto* nu = std::get_if<NonUniformBudget>(&src.budget);
    require(nu != nullptr, "source instance must carry per-vertex budgets");
    require(src.objective.kind == ObjectiveKind::MaxLen && src.objective.ell == 1,
            "reduction is for MaxLen with ell = 1");
    ResolvedBudget rb = resolve_budget(src.budget, src.graph.n());
    NonUniformView view;
    view.k_of.assign(src.graph.n() + 1, 0);
    for (Vertex v = 1; v <= src.graph.n(); ++v) {
        view.k_of[v] = rb.limit[rb.group_of[v]];
        view.k_max = std::max(view.k_max, view.k_of[v]);
    }
    return view;
}

}  // namespace

ProblemInstance reduce_nonuniform_to_uniform(const ProblemInstance& src) {
    NonUniformView view = nonuniform_of(src);
    const int n = src.graph.n();
    const int tau = src.graph.tau();
    const int k = view.k_max;
    const Vertex u1 = n + 1, u2 = n + 2;
    std::vector<std::vector<Edge>> layers = src.graph.layers();
    layers.resize(tau + 2 * k * (n + 2));
    for (int c = 0; c < 4 * k; ++c) layers[tau + c] = {{u1, u2}};
    for (int i = 1; i <= n; ++i) {
        const TimeStep base = tau + 2 * k * (i + 1);  // block is base+1..base+2k
        for (int c = 1; c <= 2 * (k - view.k_of[i]); ++c)
            layers[base + c - 1] = {{i, u1}};
    }
    return {TemporalGraph(n + 2, tau + 2 * k * (n + 2), std::move(layers)),
            UniformBudget{k}, src.objective};
}

ActivityTimeline nonuniform_witness_to_uniform(const ProblemInstance& src,
                                               const ActivityTimeline& t) {
    NonUniformView view = nonuniform_of(src);
    const int n = src.graph.n();
    const int tau = src.graph.tau();
    const int k = view.k_max;
    std::vector<IntervalAssignment> entries = t.entries();
    for (int a = 1; a <= k; ++a) {
        entries.push_back({n + 1, tau + 2 * a - 1, tau + 2 * a});
        entries.push_back({n + 2, tau + 2 * k + 2 * a - 1, tau + 2 * k + 2 * a});
    }
    // two gadget layers per missing allowance, covered pairwise
    for (int i = 1; i <= n; ++i) {
        const TimeStep base = tau + 2 * k * (i + 1);
        for (int a = 1; a <= k - view.k_of[i]; ++a)
            entries.push_back({i, base + 2 * a - 1, base + 2 * a});
    }
    return ActivityTimeline(std::move(entries));
}

ActivityTimeline uniform_witness_to_nonuniform(const ProblemInstance& src,
                                               const ActivityTimeline& t) {
    nonuniform_of(src);
    const int n = src.graph.n();
    const int tau = src.graph.tau();
    std::vector<IntervalAssignment> entries;
    for (const auto& iv : t.entries())
        if (iv.v <= n && iv.a <= tau)
            entries.push_back({iv.v, iv.a, std::min(iv.b, tau)});
    return ActivityTimeline(std::move(entries));
}

// ---- instance generation ----

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1) with 53 random bits, identical on every platform
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

TemporalGraph generate_random(int n, int tau, double p, std::uint64_t seed) {
    require(n >= 0, "vertex count must be nonnegative");
    require(tau >= 1, "lifetime must be at least 1");
    require(p >= 0.0 && p <= 1.0, "probability must be within [0, 1]");
    SplitMix64 rng{seed};
    std::vector<std::vector<Edge>> layers(tau);
    for (int t = 0; t < tau; ++t)
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng.next_unit() < p) layers[t].push_back({u, v});
    return TemporalGraph(n, tau, std::move(layers));
}

}  // namespace untangle
