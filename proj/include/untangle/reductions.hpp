#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "untangle/core.hpp"

// Instance transformations between covering problems and the two timeline
// problems, each paired with witness maps in whichever directions the
// underlying equivalence supplies them, plus small brute-force solvers for
// the source problems so every transformation can be cross-checked end to
// end on its own.

namespace untangle {

struct BinPackingInstance {
    std::vector<int> sizes;  // item sizes, unary-scale (validated small)
    int beta = 0;            // number of bins
    int bin_size = 0;        // capacity B of each bin
};

// Literal x^v_i (i in {1,2}) or its negation.
struct TwoCnfLiteral {
    Vertex v = 0;
    int idx = 1;
    bool negated = false;
    auto operator<=>(const TwoCnfLiteral&) const = default;
};

struct TwoCnfClause {
    TwoCnfLiteral first, second;
    auto operator<=>(const TwoCnfClause&) const = default;
};

// Delete at most `budget` clauses so the rest is satisfiable.
struct TwoCnfInstance {
    int n_vertices = 0;  // variables are x^v_1, x^v_2 for v in 1..n_vertices
    std::vector<TwoCnfClause> clauses;
    int budget = 0;
};

struct TwoCnfSolution {
    std::vector<int> deleted;          // indices into clauses, ascending
    std::vector<std::uint8_t> values;  // values[2*(v-1) + (i-1)] for x^v_i
};

// ---- odd cycle transversal -> SumLen with two identical layers ----

// Target: E_1 = E_2 = E, k = 1, SumLen bound s. YES iff G has an odd cycle
// transversal of size <= s.
ProblemInstance reduce_oct_to_sum(const StaticGraph& g, int s);

// X must meet every odd cycle; builds the timeline the equivalence promises
// (transversal vertices active over both layers, each side of the remaining
// bipartition active in one layer). Throws std::invalid_argument if G - X is
// not bipartite.
ActivityTimeline oct_witness_to_timeline(const StaticGraph& g,
                                         const std::vector<Vertex>& transversal);

// Vertices whose interval spans both layers; always a transversal when the
// timeline is a valid witness for the reduced instance.
std::vector<Vertex> timeline_to_oct_witness(const ActivityTimeline& t);

// Smallest-first subset search; returns a minimum transversal of size <= s.
std::optional<std::vector<Vertex>> oct_brute_force(const StaticGraph& g, int s);

// 2-coloring of g if bipartite (color[v-1] in {0,1}).
std::optional<std::vector<int>> two_color(const StaticGraph& g);

// ---- SumLen with tau = 2, k = 1 -> clause deletion ----

// Requires g.tau() == 2 (else std::invalid_argument); k = 1 is implied by
// the variable layout. Each edge of layer i yields ell+1 copies of
// (x^u_i or x^v_i); each vertex yields one (not x^v_1 or not x^v_2);
// deletion budget is ell.
TwoCnfInstance reduce_sum_tau2_to_almost2sat(const TemporalGraph& g, int ell);

ActivityTimeline two_cnf_solution_to_timeline(const TemporalGraph& g,
                                              const TwoCnfSolution& sol);

// Exhaustive deletion + assignment search. Caps keep the search honest:
// refuses (SolverRefusal) when budget > max_budget or variable count
// > max_vars. Identical clauses are grouped; a constraint only disappears
// when every copy goes, so deletions are chosen per whole group at the cost
// of all its copies (partial deletion of a group changes nothing).
struct TwoCnfCaps {
    int max_budget = 3;
    int max_vars = 12;
};
std::optional<TwoCnfSolution> two_cnf_brute_force(const TwoCnfInstance& f,
                                                  const TwoCnfCaps& caps = {});

// ---- unary bin packing -> multicolored MaxLen with ell = 1 ----

// Rejects (std::invalid_argument) sizes whose sum exceeds beta * B after
// padding, nonpositive entries, or totals above the unary cap.
struct BinPackingCaps {
    int max_total = 64;  // sum of sizes after padding; keeps tau small
};

// Pads with unit items until the sizes sum to exactly beta * B; the answer
// is unchanged.
BinPackingInstance normalize_bin_packing(BinPackingInstance bp,
                                         const BinPackingCaps& caps = {});

// Output: n = 2*beta (u_j = j, v_j = beta + j), tau = 2 * sum(sizes),
// item i occupies the next 2*s_i layers. MaxLen objective, ell = 1.
ProblemInstance reduce_binpacking_to_multicolored(const BinPackingInstance& bp);

// Layer range [first, last] of item i (1-based) in the reduced instance.
std::vector<std::pair<TimeStep, TimeStep>> bin_packing_item_ranges(
    const BinPackingInstance& bp);

// assignment[i-1] in 1..beta is the bin of item i; must be a perfect packing.
ActivityTimeline packing_to_timeline(const BinPackingInstance& bp,
                                     const std::vector<int>& assignment);

// Reads the bin of each item off a valid witness (throws
// std::invalid_argument when the timeline does not decode).
std::vector<int> timeline_to_packing(const BinPackingInstance& bp,
                                     const ActivityTimeline& t);

// DFS over bins with load pruning; nullopt when no perfect packing exists.
std::optional<std::vector<int>> bin_packing_brute_force(const BinPackingInstance& bp);

// ---- multicolored -> per-vertex budgets (MaxLen, ell = 1) ----

// Appends, for each class i, 2*k_i copies of a layer holding a clique on the
// class; per-vertex budget k'_v = k_i for v in class i. Requires a
// MulticoloredBudget and MaxLen ell = 1.
ProblemInstance reduce_multicolored_to_nonuniform(const ProblemInstance& src);

// Extends a source witness over the appended clique layers / restricts a
// target witness to the original lifetime.
ActivityTimeline multicolored_witness_to_nonuniform(const ProblemInstance& src,
                                                    const ActivityTimeline& t);
ActivityTimeline nonuniform_witness_to_multicolored(const ProblemInstance& src,
                                                    const ActivityTimeline& t);

// ---- per-vertex budgets -> uniform budget (MaxLen, ell = 1) ----

// Adds helpers u1 = n+1, u2 = n+2, sets k = max k_v, and appends layers
// tau+1..tau+2k(n+2): 4k copies of {{u1,u2}}, then per vertex v a block of
// 2(k - k_v) copies of {{v,u1}} padded with empty layers to width 2k.
ProblemInstance reduce_nonuniform_to_uniform(const ProblemInstance& src);

ActivityTimeline nonuniform_witness_to_uniform(const ProblemInstance& src,
                                               const ActivityTimeline& t);
ActivityTimeline uniform_witness_to_nonuniform(const ProblemInstance& src,
                                               const ActivityTimeline& t);

// ---- instance generation ----

// Each of the C(n,2)*tau possible time-edges is present independently with
// probability p. The generator is fully pinned: SplitMix64 stream seeded
// with `seed`, one draw per (t, u, v) in lexicographic order, an edge is
// kept iff (z >> 11) * 2^-53 < p. Identical output on every platform.
TemporalGraph generate_random(int n, int tau, double p, std::uint64_t seed);

}  // namespace untangle
